#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "woc/error.hpp"

namespace woc {

/// Fixed-width bit vector indexed by hypercube coordinates; the embedding
/// target for characteristic vectors. Width d = 2^n - 2 never changes after
/// construction.
class CharVector {
 public:
  CharVector() = default;
  explicit CharVector(int bit_count);

  int size() const { return bits_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool value = true);

  int count() const;
  bool none() const;
  bool is_subset_of(const CharVector& other) const;

  friend CharVector operator^(const CharVector& a, const CharVector& b);
  friend CharVector operator|(const CharVector& a, const CharVector& b);
  friend CharVector operator&(const CharVector& a, const CharVector& b);

  friend bool operator==(const CharVector& a, const CharVector& b) = default;
  friend bool operator<(const CharVector& a, const CharVector& b) {
    if (a.bits_ != b.bits_) return a.bits_ < b.bits_;
    return a.words_ < b.words_;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void check_same_length(const CharVector& other) const;

  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Hamming distance: popcount of the XOR. Lengths must agree.
int hamming(const CharVector& a, const CharVector& b);

struct CharVectorHash {
  std::size_t operator()(const CharVector& v) const;
};

}  // namespace woc
