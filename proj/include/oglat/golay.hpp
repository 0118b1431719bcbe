#pragma once

#include "oglat/int_types.hpp"

#include <array>
#include <bitset>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace oglat {

// Extended binary Golay code [24,12,8] in systematic form [I12 | B].
// Coordinates 0..22 are the points of Z/23, coordinate 23 is the extension
// (parity) position; B was derived once from the length-23 quadratic-residue
// code and is validated by the weight-distribution check at construction,
// not trusted.
class GolayCode {
 public:
  static constexpr int kLength = 24;
  static constexpr int kDim = 12;

  GolayCode() {
    static constexpr std::array<std::array<int, 12>, 12> kB = {{
        {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1},
        {1, 1, 1, 1, 1, 0, 0, 1, 0, 0, 1, 0},
        {1, 1, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1},
        {1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0},
        {1, 1, 0, 0, 1, 1, 0, 1, 1, 0, 0, 1},
        {0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1},
        {0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 1, 1},
        {1, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0, 0},
        {0, 1, 0, 1, 1, 0, 1, 1, 1, 1, 0, 0},
        {0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1, 0},
        {1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 1},
        {0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1},
    }};
    for (int i = 0; i < kDim; ++i) {
      std::uint32_t word = 1u << i;
      std::uint32_t tail = 0;
      for (int j = 0; j < 12; ++j)
        if (kB[i][j]) tail |= 1u << (12 + j);
      generator_[i] = word | tail;
    }
    materialize();
    validate();
  }

  // Generator rows as 24-bit masks, bit j = coordinate j.
  const std::array<std::uint32_t, 12>& generator() const { return generator_; }
  const std::vector<std::uint32_t>& codewords() const { return words_; }

  bool contains(std::uint32_t word) const {
    // syndrome decode against the systematic generator
    std::uint32_t acc = 0;
    for (int i = 0; i < kDim; ++i)
      if (word & (1u << i)) acc ^= generator_[i];
    return acc == word;
  }

  std::map<int, int> weight_distribution() const {
    std::map<int, int> dist;
    for (std::uint32_t w : words_) ++dist[std::bitset<24>(w).count()];
    return dist;
  }

  // True iff the coordinate permutation maps the code onto itself.
  bool permutation_preserves(const std::array<int, 24>& perm) const {
    for (std::uint32_t g : generator_) {
      std::uint32_t img = 0;
      for (int j = 0; j < kLength; ++j)
        if (g & (1u << j)) img |= 1u << perm[j];
      if (!contains(img)) return false;
    }
    return true;
  }

 private:
  void materialize() {
    words_.resize(4096);
    for (std::uint32_t mask = 0; mask < 4096; ++mask) {
      std::uint32_t w = 0;
      for (int i = 0; i < kDim; ++i)
        if (mask & (1u << i)) w ^= generator_[i];
      words_[mask] = w;
    }
  }

  void validate() const {
    auto dist = weight_distribution();
    const std::map<int, int> expected = {{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    if (dist != expected)
      throw std::logic_error("GolayCode: weight distribution check failed");
  }

  std::array<std::uint32_t, 12> generator_{};
  std::vector<std::uint32_t> words_;
};

inline const GolayCode& make_golay() {
  static const GolayCode code;
  return code;
}

// Stored generators of code automorphisms (inside M24), revalidated at load:
// the 23-cycle i -> i+1 on Z/23 and the involution i -> -1/i swapping 0 with
// the extension coordinate. Both come from the PSL(2,23) action on the
// quadratic-residue construction.
inline const std::array<int, 24>& golay_cycle_permutation() {
  static const std::array<int, 24> p = {1,  2,  3,  4,  5,  6,  7,  8,  9,  10, 11, 12,
                                        13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 0,  23};
  static const bool ok = make_golay().permutation_preserves(p);
  if (!ok) throw std::logic_error("golay_cycle_permutation: stored constant invalid");
  return p;
}

inline const std::array<int, 24>& golay_involution_permutation() {
  static const std::array<int, 24> p = {23, 22, 11, 15, 17, 9, 19, 13, 20, 5, 16, 2,
                                        21, 7,  18, 3,  10, 4, 14, 6,  8,  12, 1, 0};
  static const bool ok = make_golay().permutation_preserves(p);
  if (!ok) throw std::logic_error("golay_involution_permutation: stored constant invalid");
  return p;
}

}  // namespace oglat
