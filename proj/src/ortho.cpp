#include "gga/ortho.hpp"

#include "gga/fano.hpp"

#include <stdexcept>

namespace gga::ortho {

namespace {

// Matrix row/column for basis label a: e_0..e_7 when n = 8, e_1..e_7 when n = 7.
int slot(int n, int a) {
  if (n == 8) return a;
  if (a < 1 || a > 7) throw std::invalid_argument("ortho: basis label out of range for n = 7");
  return a - 1;
}

}  // namespace

QMat phi(const QVec& x, const QVec& y) {
  const int n = static_cast<int>(x.size());
  if (n != 7 && n != 8) throw std::invalid_argument("phi: vectors must live in Q^7 or Q^8");
  if (y.size() != x.size()) throw std::invalid_argument("phi: length mismatch");
  // phi_{x,y}(e_c) = x_c y - y_c x.
  QMat m(n, n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) m.at(r, c) = x[c] * y[r] - y[c] * x[r];
  return m;
}

QMat phi_units(int n, int a, int b) {
  QVec x(n, Rat(0)), y(n, Rat(0));
  x[slot(n, a)] = 1;
  y[slot(n, b)] = 1;
  return phi(x, y);
}

std::vector<QMat> graded_basis(int n, int i) {
  if (n != 7 && n != 8) throw std::invalid_argument("graded_basis: n must be 7 or 8");
  if (i < 1 || i > 7) throw std::invalid_argument("graded_basis: degree out of range");
  using fano::wrap7;
  std::vector<QMat> basis;
  basis.push_back(phi_units(n, wrap7(i + 1), wrap7(i + 3)));
  basis.push_back(phi_units(n, wrap7(i + 2), wrap7(i + 6)));
  basis.push_back(phi_units(n, wrap7(i + 4), wrap7(i + 5)));
  if (n == 8) basis.push_back(phi_units(n, 0, i));
  return basis;
}

namespace {

// Coordinates of a degree-g_k matrix in the graded basis B_k. The four index
// pairs of B_k are disjoint, so the coefficients can be read off directly;
// reconstruction then certifies membership in the span.
std::optional<QVec> in_graded_basis(const QMat& m, int n, int k) {
  using fano::wrap7;
  const int d = (n == 8) ? 4 : 3;
  QVec coords(d);
  coords[0] = m.at(slot(n, wrap7(k + 3)), slot(n, wrap7(k + 1)));
  coords[1] = m.at(slot(n, wrap7(k + 6)), slot(n, wrap7(k + 2)));
  coords[2] = m.at(slot(n, wrap7(k + 5)), slot(n, wrap7(k + 4)));
  if (n == 8) coords[3] = m.at(k, 0);
  const std::vector<QMat> basis = graded_basis(n, k);
  QMat rebuilt(n, n);
  for (int t = 0; t < d; ++t)
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (basis[t].at(r, c) != 0) rebuilt.at(r, c) += coords[t] * basis[t].at(r, c);
  if (!(rebuilt == m)) return std::nullopt;
  return coords;
}

}  // namespace

OracleReport oracle_compare(const GGAlgebra& algebra) {
  const int d = algebra.d();
  if (d != 4 && d != 3)
    throw std::invalid_argument("oracle_compare: expects the d4 (d=4) or b3 (d=3) twist");
  const int n = (d == 4) ? 8 : 7;

  std::array<std::vector<QMat>, 8> basis;
  for (int i = 1; i <= 7; ++i) basis[i] = graded_basis(n, i);

  OracleReport report;
  auto mismatch = [&](int i, int p, int j, int q, const std::string& why) {
    report.mismatches.push_back("(" + std::to_string(i) + "," + std::to_string(p + 1) + ")x(" +
                                std::to_string(j) + "," + std::to_string(q + 1) + "): " + why);
  };

  QVec unit_p(d, Rat(0)), unit_q(d, Rat(0));
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j)
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
          ++report.pairs_checked;
          const QMat comm = basis[i][p] * basis[j][q] - basis[j][q] * basis[i][p];
          unit_p.assign(d, Rat(0));
          unit_q.assign(d, Rat(0));
          unit_p[p] = 1;
          unit_q[q] = 1;
          const QVec sigma = algebra.twist().apply(i, j, unit_p, unit_q);
          if (i == j) {
            if (!comm.is_zero()) mismatch(i, p, j, q, "commutator nonzero on a diagonal pair");
            if (!is_zero(sigma)) mismatch(i, p, j, q, "sigma nonzero on a diagonal pair");
            continue;
          }
          const auto coords = in_graded_basis(comm, n, fano::star(i, j));
          if (!coords) {
            mismatch(i, p, j, q, "commutator outside the graded component");
            continue;
          }
          if (*coords != sigma) mismatch(i, p, j, q, "structure constants differ");
        }
  return report;
}

// ---------------------------------------------------------------------------
// Octonions

std::pair<int, int> octonion_basis_product(int i, int j) {
  if (i == 0) return {1, j};
  if (j == 0) return {1, i};
  if (i == j) return {-1, 0};
  // The line through i and j, ordered (l, l+1, l+3), multiplies like
  // quaternions; the cyclically ordered pairs are exactly those with
  // (j - i) mod 7 in {1, 2, 4}.
  const int sign = ((j - i) % 7 + 7) % 7 == 1 || ((j - i) % 7 + 7) % 7 == 2 ||
                           ((j - i) % 7 + 7) % 7 == 4
                       ? 1
                       : -1;
  return {sign, fano::star(i, j)};
}

QVec octonion_product(const QVec& x, const QVec& y) {
  if (x.size() != 8 || y.size() != 8)
    throw std::invalid_argument("octonion_product: vectors must live in Q^8");
  QVec out(8, Rat(0));
  for (int i = 0; i < 8; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (y[j] == 0) continue;
      const auto [sign, k] = octonion_basis_product(i, j);
      out[k] += Rat(sign) * x[i] * y[j];
    }
  }
  return out;
}

std::pair<QMat, QMat> mult_operators(const QVec& x) {
  QMat left(8, 8), right(8, 8);
  QVec e(8, Rat(0));
  for (int j = 0; j < 8; ++j) {
    e.assign(8, Rat(0));
    e[j] = 1;
    const QVec lx = octonion_product(x, e);
    const QVec rx = octonion_product(e, x);
    for (int r = 0; r < 8; ++r) {
      left.at(r, j) = lx[r];
      right.at(r, j) = rx[r];
    }
  }
  return {left, right};
}

}  // namespace gga::ortho
