#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace gga::fano {

/// An element of Z_2^3 under the labelling g_0..g_7 with
/// g_i + g_{i+1} = g_{i+3} (indices mod 7 on 1..7). g_0 is neutral.
struct GroupElement {
  std::uint8_t index = 0;
  friend GroupElement operator+(GroupElement a, GroupElement b);
  bool operator==(const GroupElement&) const = default;
};

/// Index form of the group sum: g_i + g_j = g_{star(i,j)}.
int star(int i, int j);

/// The Z_2^3 triple behind label i, as packed bits (a,b,c) -> a<<2|b<<1|c.
int label_bits(int i);

/// mod-7 arithmetic staying in 1..7 (so wrap7(8) == 1, wrap7(0) == 7).
int wrap7(int i);

/// The 7 Fano lines {i, i+1, i+3} as sorted triples, sorted lexicographically.
const std::array<std::array<int, 3>, 7>& lines();

/// A line-preserving bijection of {1..7}; perm[0] is fixed to 0.
struct Collineation {
  std::array<std::uint8_t, 8> perm{};

  int operator()(int i) const { return perm[i]; }
  Collineation then(const Collineation& second) const;  // apply *this first
  Collineation inverse() const;
  bool operator==(const Collineation&) const = default;
  bool operator<(const Collineation& o) const { return perm < o.perm; }
};

bool is_collineation(const Collineation& c);

/// All 168 collineations, found by exhaustive filtering of the 5040
/// permutations of {1..7}; sorted, cached after the first call.
const std::vector<Collineation>& collineations();

}  // namespace gga::fano
