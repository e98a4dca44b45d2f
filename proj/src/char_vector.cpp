#include "woc/char_vector.hpp"

#include <bit>

namespace woc {

CharVector::CharVector(int bit_count) : bits_(bit_count), words_((bit_count + 63) / 64, 0) {
  if (bit_count < 0) throw std::invalid_argument("CharVector: negative width");
}

void CharVector::set(int i, bool value) {
  if (i < 0 || i >= bits_) throw std::out_of_range("CharVector::set");
  if (value)
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  else
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}

int CharVector::count() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool CharVector::none() const {
  for (std::uint64_t w : words_)
    if (w) return false;
  return true;
}

void CharVector::check_same_length(const CharVector& other) const {
  if (bits_ != other.bits_)
    throw wo_error(errc::length_mismatch, "CharVector widths " + std::to_string(bits_) + " and " +
                                              std::to_string(other.bits_));
}

bool CharVector::is_subset_of(const CharVector& other) const {
  check_same_length(other);
  for (size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

CharVector operator^(const CharVector& a, const CharVector& b) {
  a.check_same_length(b);
  CharVector out(a.bits_);
  for (size_t i = 0; i < a.words_.size(); ++i) out.words_[i] = a.words_[i] ^ b.words_[i];
  return out;
}

CharVector operator|(const CharVector& a, const CharVector& b) {
  a.check_same_length(b);
  CharVector out(a.bits_);
  for (size_t i = 0; i < a.words_.size(); ++i) out.words_[i] = a.words_[i] | b.words_[i];
  return out;
}

CharVector operator&(const CharVector& a, const CharVector& b) {
  a.check_same_length(b);
  CharVector out(a.bits_);
  for (size_t i = 0; i < a.words_.size(); ++i) out.words_[i] = a.words_[i] & b.words_[i];
  return out;
}

int hamming(const CharVector& a, const CharVector& b) {
  if (a.size() != b.size())
    throw wo_error(errc::length_mismatch, "hamming: widths " + std::to_string(a.size()) +
                                              " and " + std::to_string(b.size()));
  int total = 0;
  for (size_t i = 0; i < a.words().size(); ++i)
    total += std::popcount(a.words()[i] ^ b.words()[i]);
  return total;
}

std::size_t CharVectorHash::operator()(const CharVector& v) const {
  std::size_t h = static_cast<std::size_t>(v.size()) * 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : v.words()) h = (h ^ w) * 0x100000001b3ull;
  return h;
}

}  // namespace woc
