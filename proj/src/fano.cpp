#include "gga/fano.hpp"

#include <algorithm>
#include <numeric>

namespace gga::fano {

namespace {

// Labelling g_0..g_7 as Z_2^3 triples, packed (a,b,c) -> a<<2|b<<1|c.
constexpr std::array<int, 8> kBits = {
    0b000, 0b100, 0b010, 0b001, 0b110, 0b011, 0b111, 0b101};

constexpr std::array<int, 8> make_index_of_bits() {
  std::array<int, 8> inv{};
  for (int i = 0; i < 8; ++i) inv[kBits[i]] = i;
  return inv;
}
constexpr std::array<int, 8> kIndexOfBits = make_index_of_bits();

constexpr std::array<std::array<std::uint8_t, 8>, 8> make_add_table() {
  std::array<std::array<std::uint8_t, 8>, 8> t{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      t[i][j] = static_cast<std::uint8_t>(kIndexOfBits[kBits[i] ^ kBits[j]]);
  return t;
}
constexpr auto kAdd = make_add_table();

}  // namespace

GroupElement operator+(GroupElement a, GroupElement b) {
  return GroupElement{kAdd[a.index][b.index]};
}

int star(int i, int j) { return kAdd[i][j]; }

int label_bits(int i) { return kBits[i]; }

int wrap7(int i) { return (i - 1 + 7 * 8) % 7 + 1; }

const std::array<std::array<int, 3>, 7>& lines() {
  static const auto result = [] {
    std::array<std::array<int, 3>, 7> ls{};
    for (int i = 1; i <= 7; ++i) {
      std::array<int, 3> line = {i, wrap7(i + 1), wrap7(i + 3)};
      std::sort(line.begin(), line.end());
      ls[i - 1] = line;
    }
    std::sort(ls.begin(), ls.end());
    return ls;
  }();
  return result;
}

Collineation Collineation::then(const Collineation& second) const {
  Collineation r;
  for (int i = 0; i < 8; ++i) r.perm[i] = second.perm[perm[i]];
  return r;
}

Collineation Collineation::inverse() const {
  Collineation r;
  for (int i = 0; i < 8; ++i) r.perm[perm[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool is_collineation(const Collineation& c) {
  if (c.perm[0] != 0) return false;
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      if (c.perm[star(i, j)] != star(c.perm[i], c.perm[j])) return false;
    }
  return true;
}

const std::vector<Collineation>& collineations() {
  static const std::vector<Collineation> result = [] {
    std::vector<Collineation> out;
    std::array<std::uint8_t, 7> p = {1, 2, 3, 4, 5, 6, 7};
    do {
      Collineation c;
      for (int i = 1; i <= 7; ++i) c.perm[i] = p[i - 1];
      if (is_collineation(c)) out.push_back(c);
    } while (std::next_permutation(p.begin(), p.end()));
    std::sort(out.begin(), out.end());
    return out;
  }();
  return result;
}

}  // namespace gga::fano
