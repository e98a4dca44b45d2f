#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "woc/core.hpp"
#include "woc/enumerate.hpp"

namespace woc {

/// A token either adds a two-order to a state's decomposition or removes
/// one. Add and remove tokens over the same two-order are mutual reverses.
enum class TokenSign { add, remove };

struct Token {
  TwoOrder two_order;
  TokenSign sign;

  Token reversed() const {
    return {two_order, sign == TokenSign::add ? TokenSign::remove : TokenSign::add};
  }

  friend bool operator==(const Token& a, const Token& b) = default;
};

/// Every token on the ground set: two per two-order, in coordinate order,
/// add before remove.
std::vector<Token> all_tokens(const Ground& g);

/// Set semantics: adjust the state's decomposition by the token's two-order
/// and rebuild; if the adjusted set is not a decomposition the state is
/// returned unchanged. Ineffective tokens are the identity, never an error.
WeakOrder apply_token_set(const WeakOrder& state, const Token& token);

/// Block semantics, no set reconstruction: an effective add splits the one
/// block straddling the token's (bottom, top) split; an effective remove
/// merges the two blocks meeting at that cut. Agrees with apply_token_set on
/// every state.
WeakOrder apply_token_direct(const WeakOrder& state, const Token& token);

/// Tokens that move the state, in all_tokens order. A state with k blocks
/// admits exactly k-1 effective removes; each effective token traverses one
/// Hasse edge.
std::vector<Token> effective_tokens(const WeakOrder& state);

struct WalkStep {
  Token token;
  bool effective;
  WeakOrder state;  // after the step
};

struct WalkTrace {
  WeakOrder start;
  std::vector<WalkStep> steps;

  const WeakOrder& final_state() const { return steps.empty() ? start : steps.back().state; }
};

/// Folds apply_token_set over the token list, recording each step.
WalkTrace walk(const WeakOrder& start, std::span<const Token> tokens);

/// Exhaustive verification over all states and tokens.
struct MediumReport {
  int state_count = 0;
  int token_count = 0;

  /// Effective moves that the reverse token fails to undo.
  struct ReverseViolation {
    WeakOrder from;
    WeakOrder to;
    Token token;
  };
  std::vector<ReverseViolation> reverse_violations;

  /// Directed cover pairs not realized by exactly one token.
  struct EdgeViolation {
    WeakOrder from;
    WeakOrder to;
    int token_count = 0;
  };
  std::vector<EdgeViolation> edge_violations;

  bool connected = false;
  bool concise = false;  // geodesics of length = symmetric difference exist

  bool passed() const {
    return reverse_violations.empty() && edge_violations.empty() && connected && concise;
  }
};

/// Checks the reverse axiom, the edge-token bijection, connectivity under
/// effective moves from every start, and wellgradedness of the decomposition
/// family.
MediumReport check_medium_axioms(const Ground& g, int cap = kDefaultCap);

/// Token text: '+' or '-' followed by the bottom block, e.g. "+bc", "-a".
std::string to_text(const Token& t, const Ground& g);
Token parse_token(std::string_view text, const Ground& g);

}  // namespace woc
