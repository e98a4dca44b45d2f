#include "woc/medium.hpp"

#include <queue>

#include "woc/metric.hpp"
#include "woc/text.hpp"

namespace woc {

std::vector<Token> all_tokens(const Ground& g) {
  std::vector<Token> out;
  for (const TwoOrder& v : enumerate_two_orders(g, kMaxGround)) {
    out.push_back({v, TokenSign::add});
    out.push_back({v, TokenSign::remove});
  }
  return out;
}

WeakOrder apply_token_set(const WeakOrder& state, const Token& token) {
  if (state.ground_size() != token.two_order.ground_size())
    throw wo_error(errc::ground_mismatch, "apply_token_set");
  const JSet current = two_order_decomposition(state);
  const Mask bottom = token.two_order.bottom();
  const JSet adjusted =
      token.sign == TokenSign::add ? current.with(bottom) : current.without(bottom);
  if (adjusted == current) return state;
  const auto rebuilt = from_two_orders(adjusted);
  return rebuilt.ok() ? *rebuilt : state;
}

WeakOrder apply_token_direct(const WeakOrder& state, const Token& token) {
  if (state.ground_size() != token.two_order.ground_size())
    throw wo_error(errc::ground_mismatch, "apply_token_direct");
  const Mask bottom = token.two_order.bottom();
  const Mask top = token.two_order.top();
  const int k = state.block_count();

  if (token.sign == TokenSign::add) {
    // Effective iff one block straddles the (bottom, top) split, everything
    // before it is pure bottom, and everything after it is pure top.
    int straddle = -1;
    for (int i = 0; i < k; ++i) {
      const Mask block = state.block(i);
      const bool meets_bottom = (block & bottom) != 0;
      const bool meets_top = (block & top) != 0;
      if (straddle < 0) {
        if (meets_bottom && meets_top)
          straddle = i;
        else if (meets_top)
          return state;  // split point passed without a straddling block
      } else if (meets_bottom) {
        return state;  // bottom-side elements after the split
      }
    }
    if (straddle < 0) return state;
    std::vector<Mask> blocks;
    blocks.reserve(k + 1);
    for (int i = 0; i < k; ++i) {
      if (i == straddle) {
        blocks.push_back(state.block(i) & bottom);
        blocks.push_back(state.block(i) & top);
      } else {
        blocks.push_back(state.block(i));
      }
    }
    return WeakOrder(state.ground_size(), std::move(blocks));
  }

  // Remove: effective iff the two-order is one of the state's cuts.
  Mask prefix = 0;
  for (int i = 0; i + 1 < k; ++i) {
    prefix |= state.block(i);
    if (prefix == bottom) return merge_adjacent(state, i);
    if (prefix > bottom) break;  // cuts grow monotonically
  }
  return state;
}

std::vector<Token> effective_tokens(const WeakOrder& state) {
  std::vector<Token> out;
  for (const Token& t : all_tokens(Ground(state.ground_size())))
    if (!(apply_token_direct(state, t) == state)) out.push_back(t);
  return out;
}

WalkTrace walk(const WeakOrder& start, std::span<const Token> tokens) {
  WalkTrace trace{start, {}};
  WeakOrder current = start;
  for (const Token& t : tokens) {
    WeakOrder next = apply_token_set(current, t);
    const bool effective = !(next == current);
    trace.steps.push_back({t, effective, next});
    current = std::move(next);
  }
  return trace;
}

MediumReport check_medium_axioms(const Ground& g, int cap) {
  const HasseGraph h = build_hasse(g, cap);
  const auto tokens = all_tokens(g);

  MediumReport report;
  report.state_count = static_cast<int>(h.vertices.size());
  report.token_count = static_cast<int>(tokens.size());

  // Reverse axiom: every effective move is undone by the reverse token.
  for (const WeakOrder& state : h.vertices) {
    for (const Token& t : tokens) {
      const WeakOrder moved = apply_token_set(state, t);
      if (moved == state) continue;
      if (!(apply_token_set(moved, t.reversed()) == state))
        report.reverse_violations.push_back({state, moved, t});
    }
  }

  // Edge-token bijection: each directed cover pair is realized by exactly
  // one token.
  for (const auto& [lo, hi] : h.edges) {
    for (const auto& [from, to] : {std::pair(lo, hi), std::pair(hi, lo)}) {
      int realizers = 0;
      for (const Token& t : tokens)
        if (apply_token_set(h.vertices[from], t) == h.vertices[to]) ++realizers;
      if (realizers != 1)
        report.edge_violations.push_back({h.vertices[from], h.vertices[to], realizers});
    }
  }

  // Connectivity: effective moves reach every state from every start.
  std::vector<std::vector<int>> adj(h.vertices.size());
  for (int s = 0; s < static_cast<int>(h.vertices.size()); ++s)
    for (const Token& t : tokens) {
      const WeakOrder moved = apply_token_set(h.vertices[s], t);
      if (!(moved == h.vertices[s])) adj[s].push_back(h.index_of(moved));
    }
  report.connected = true;
  for (int s = 0; s < static_cast<int>(adj.size()) && report.connected; ++s) {
    std::vector<char> seen(adj.size(), 0);
    std::queue<int> queue;
    seen[s] = 1;
    queue.push(s);
    int reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          queue.push(v);
        }
    }
    if (reached != static_cast<int>(adj.size())) report.connected = false;
  }

  // Concision: within the decomposition family, any two states are joined
  // by a geodesic of single-element steps.
  std::vector<JSet> family;
  family.reserve(h.vertices.size());
  for (const WeakOrder& w : h.vertices) family.push_back(two_order_decomposition(w));
  report.concise = verify_well_graded(family).well_graded;

  return report;
}

std::string to_text(const Token& t, const Ground& g) {
  return (t.sign == TokenSign::add ? "+" : "-") + to_text(t.two_order, g);
}

Token parse_token(std::string_view text, const Ground& g) {
  if (text.size() < 2 || (text[0] != '+' && text[0] != '-'))
    throw std::invalid_argument("token must start with '+' or '-': '" + std::string(text) + "'");
  const TokenSign sign = text[0] == '+' ? TokenSign::add : TokenSign::remove;
  return {parse_two_order(text.substr(1), g), sign};
}

}  // namespace woc
