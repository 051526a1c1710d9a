#pragma once

#include "gga/algebra.hpp"

#include <array>
#include <string_view>

namespace gga::catalog {

/// Twist for the coefficient-dimension-4 algebra whose derived part is the
/// orthogonal algebra of size 8. 42 nonzero tensors (7 bases x 6 offsets).
TwistTable sigma_d4();

/// Three-coordinate twist; derived part is the orthogonal algebra of size 7.
TwistTable sigma_b3();

/// Two-dimensional twist in the basis {s1, s2} of the plane a1+a2+a3 = 0,
/// obtained by restricting sigma_b3 (the restriction table is a test oracle).
TwistTable sigma_g2();

/// s1 = (0,1,-1), s2 = (2,-1,-1) as vectors of the b3 coefficient space.
const std::array<QVec, 2>& g2_basis();

enum class Mask { full, gx };
std::array<bool, 8> mask_bits(Mask mask);

/// Catalog entry point: name in {"d4","b3","g2"}, mask full or gx.
GGAlgebra make(std::string_view name, Mask mask);

// ---------------------------------------------------------------------------
// Scalar twists (the field-coefficient examples)

/// A small abelian group given by its addition table; element 0 is neutral.
struct FiniteAbelianGroup {
  std::vector<std::vector<int>> add;
  int order() const { return static_cast<int>(add.size()); }
};

FiniteAbelianGroup z2_cubed();
FiniteAbelianGroup zn_squared(int n);  // elements (a1,a2) indexed a1*n+a2

/// A scalar map sigma: G x G -> Q, the V = F case of the construction.
struct ScalarTwist {
  FiniteAbelianGroup group;
  std::vector<std::vector<Rat>> value;
};

ScalarTwist zero_scalar_twist(FiniteAbelianGroup group);
ScalarTwist constant_scalar_twist(FiniteAbelianGroup group, Rat value);

/// The gl_2 twist over Z_2^2 with xi = -1:
/// sigma((a1,a2),(b1,b2)) = (-1)^{a2 b1} - (-1)^{a1 b2}.
ScalarTwist gl2_scalar_twist();

/// Checks sigma(g,h) = -sigma(h,g) and the cyclic sum
/// sigma(g,h) sigma(g+h,k) + (cyclic) = 0. Violations are pairs/triples of
/// group element indices.
LieCheckReport verify_scalar_lie(const ScalarTwist& twist);

/// Floating-point check of the gl_n bracket identity
/// [X^{a1}Y^{a2}, X^{b1}Y^{b2}] = (xi^{a2 b1} - xi^{a1 b2}) X^{a1+b1}Y^{a2+b2}
/// over all exponent pairs; requires 2 <= n <= 6.
struct GlnReport {
  int n = 0;
  double max_deviation = 0.0;
};
GlnReport gln_check(int n);

}  // namespace gga::catalog
