#pragma once

#include "gga/algebra.hpp"

#include <string>
#include <vector>

namespace gga::reps {

/// delta(i)_{(a,b,c,d)}: the skew map e_{i+1} -> a e_{i+3}, e_{i+2} -> b e_{i+6},
/// e_{i+4} -> c e_{i+5}, e_0 -> d e_i, with the four sign-flipped returns.
QMat delta_op(int i, const QVec& coeffs);

/// Reflection through the hyperplane u^perp: s_u(v) = v - 2<v,u>/<u,u> u.
QVec reflect(const QVec& u, const QVec& v);

const QVec& u1();  // (1,1,1,-1)
const QVec& u2();  // (1,1,1,1)

/// A representation given by one module operator per algebra basis element.
struct Representation {
  std::string name;
  GGAlgebra algebra;  // source algebra (its flat basis indexes mats)
  int module_dim = 0;
  std::vector<QMat> mats;

  /// Linear extension: rho(sum x_alpha b_alpha) = sum x_alpha mats[alpha].
  QMat apply(const AlgebraElement& x) const;
};

/// The three 8-dimensional representations of the d = 4 algebra on G^x:
/// rho_1(v g_i) = delta(i)_v, rho_2 = delta(i)_{s_{u1}(v)}, rho_3 with u2.
Representation rho(int k, const GGAlgebra& d4_on_gx);

enum class Rho7 { b3, g2 };

/// The 7-dimensional representations: rho((a,b,c) g_i) = delta(i)_{(a,b,c,0)}
/// restricted to span{e_1..e_7}. For g2 the coefficients arrive in {s1,s2}
/// coordinates and are converted to (a,b,c) first.
Representation rho7(Rho7 which, const GGAlgebra& algebra_on_gx);

/// Direct sum, block diagonal per basis element (test scaffolding for
/// reducible modules).
Representation direct_sum(const Representation& a, const Representation& b);

struct HomReport {
  std::vector<std::array<int, 2>> violations;  // flat basis pairs
  bool ok() const { return violations.empty(); }
};

/// Checks rho([x,y]) = rho(x) rho(y) - rho(y) rho(x) over all basis pairs.
HomReport verify_homomorphism(const Representation& rep);

/// dim { T : T rho_a(x) = rho_b(x) T for all basis x }. Both representations
/// must share their source algebra basis.
int intertwiner_dim(const Representation& a, const Representation& b);

/// True iff every standard basis vector of the module generates the whole
/// module under the basis operators.
bool verify_irreducible(const Representation& rep);

/// A degree-preserving linear map of the algebra, stored over the flat basis.
struct Automorphism {
  GGAlgebra algebra;
  QMat matrix;  // dim x dim

  AlgebraElement apply(const AlgebraElement& x) const;
};

/// Block-diagonal lift of a coefficient-space map (one copy per degree).
Automorphism coefficient_automorphism(const GGAlgebra& algebra, const QMat& coeff_map);

bool is_bracket_automorphism(const Automorphism& a);

/// The coefficient matrix of the triality automorphism,
/// 1/2 [[1,-1,-1,1],[-1,1,-1,1],[-1,-1,1,1],[-1,-1,-1,-1]].
QMat triality_coeff_matrix();

/// The order-3 automorphism theta(v g_i) = (M v) g_i of the d = 4 algebra
/// on G^x; its fixed subalgebra is the g2 one.
Automorphism triality(const GGAlgebra& d4_on_gx);

/// Kernel of (map - id). Throws std::domain_error if the input fails the
/// bracket-automorphism check.
Subspace fixed_subalgebra(const Automorphism& a);

}  // namespace gga::reps
