#pragma once

#include "gga/algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gga::ortho {

/// phi_{x,y}(z) = <x,z> y - <y,z> x as an n x n skew matrix, n in {7, 8}.
/// For n = 8 rows/columns follow e_0..e_7; for n = 7 they follow e_1..e_7.
QMat phi(const QVec& x, const QVec& y);

/// phi_{e_a, e_b} with basis labels a, b (0..7 for n = 8, 1..7 for n = 7).
QMat phi_units(int n, int a, int b);

/// The graded basis of the degree-g_i component:
/// {phi_{i+1,i+3}, phi_{i+2,i+6}, phi_{i+4,i+5}, phi_{0,i}} for n = 8,
/// the first three of those for n = 7.
std::vector<QMat> graded_basis(int n, int i);

struct OracleReport {
  std::vector<std::string> mismatches;
  int pairs_checked = 0;
  bool ok() const { return mismatches.empty(); }
};

/// Compares the algebra's structure constants against matrix commutators of
/// the phi-basis: for all degrees i, j and basis pairs, [B_i[p], B_j[q]]
/// re-expressed in B_{i*j} must equal sigma_{i,j}(e_p, e_q). The algebra must
/// carry a d = 4 (size-8) or d = 3 (size-7) twist.
OracleReport oracle_compare(const GGAlgebra& algebra);

// ---------------------------------------------------------------------------
// Octonions

/// Product on Q^8 generated by: e_0 the unity, e_i^2 = -1, and each Fano line
/// {i, i+1, i+3} multiplying like quaternions in that cyclic order.
QVec octonion_product(const QVec& x, const QVec& y);

/// e_i e_j = sign * e_k on basis elements.
std::pair<int, int> octonion_basis_product(int i, int j);

/// Left and right multiplication operators L_x, R_x as 8 x 8 matrices.
std::pair<QMat, QMat> mult_operators(const QVec& x);

}  // namespace gga::ortho
