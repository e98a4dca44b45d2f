#pragma once

#include <string>
#include <string_view>

#include "woc/core.hpp"

namespace woc {

/// Text grammar: blocks joined by '|', lowest block first, elements printed
/// as their labels concatenated in label order. "a|bc" is ({a},{b,c}) and
/// "abc" is the trivial order. A two-order prints as its bottom block, "ab".

std::string to_text(const WeakOrder& w, const Ground& g);
std::string to_text(const TwoOrder& v, const Ground& g);
std::string to_text(Mask subset, const Ground& g);

/// Parse failures throw std::invalid_argument with a position hint.
WeakOrder parse_weak_order(std::string_view text, const Ground& g);
TwoOrder parse_two_order(std::string_view text, const Ground& g);
Mask parse_subset(std::string_view text, const Ground& g);

}  // namespace woc
