#include "woc/text.hpp"

#include <stdexcept>

namespace woc {

std::string to_text(Mask subset, const Ground& g) {
  std::string out;
  for (int e = 0; e < g.size(); ++e)
    if ((subset >> e) & 1u) out += g.label(e);
  return out;
}

std::string to_text(const WeakOrder& w, const Ground& g) {
  if (w.ground_size() != g.size()) throw wo_error(errc::ground_mismatch, "to_text");
  std::string out;
  for (int i = 0; i < w.block_count(); ++i) {
    if (i > 0) out += '|';
    out += to_text(w.block(i), g);
  }
  return out;
}

std::string to_text(const TwoOrder& v, const Ground& g) {
  if (v.ground_size() != g.size()) throw wo_error(errc::ground_mismatch, "to_text");
  return to_text(v.bottom(), g);
}

Mask parse_subset(std::string_view text, const Ground& g) {
  Mask subset = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    // Longest label match; labels are distinct so the match is unambiguous
    // for the default single-character alphabet.
    int found = -1;
    size_t best = 0;
    for (int e = 0; e < g.size(); ++e) {
      const std::string& l = g.label(e);
      if (l.size() > best && text.compare(pos, l.size(), l) == 0) {
        found = e;
        best = l.size();
      }
    }
    if (found < 0)
      throw std::invalid_argument("unknown element at '" + std::string(text.substr(pos)) + "'");
    if ((subset >> found) & 1u)
      throw std::invalid_argument("repeated element '" + g.label(found) + "'");
    subset |= Mask{1} << found;
    pos += best;
  }
  return subset;
}

WeakOrder parse_weak_order(std::string_view text, const Ground& g) {
  if (text.empty()) throw std::invalid_argument("empty weak order text");
  std::vector<Mask> blocks;
  size_t start = 0;
  Mask seen = 0;
  while (true) {
    const size_t bar = text.find('|', start);
    const std::string_view part =
        bar == std::string_view::npos ? text.substr(start) : text.substr(start, bar - start);
    if (part.empty()) throw std::invalid_argument("empty block in '" + std::string(text) + "'");
    const Mask block = parse_subset(part, g);
    if (block & seen)
      throw std::invalid_argument("element repeated across blocks in '" + std::string(text) + "'");
    seen |= block;
    blocks.push_back(block);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (seen != g.full_mask())
    throw std::invalid_argument("missing elements in '" + std::string(text) + "'");
  return WeakOrder(g.size(), std::move(blocks));
}

TwoOrder parse_two_order(std::string_view text, const Ground& g) {
  const Mask bottom = parse_subset(text, g);
  if (bottom == 0 || bottom == g.full_mask())
    throw std::invalid_argument("two-order bottom block must be nonempty and proper: '" +
                                std::string(text) + "'");
  return TwoOrder(g.size(), bottom);
}

}  // namespace woc
