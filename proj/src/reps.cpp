#include "gga/reps.hpp"

#include "gga/catalog.hpp"
#include "gga/fano.hpp"

#include <stdexcept>

namespace gga::reps {

using fano::wrap7;

QMat delta_op(int i, const QVec& coeffs) {
  if (i < 1 || i > 7) throw std::invalid_argument("delta_op: degree out of range");
  if (coeffs.size() != 4) throw std::invalid_argument("delta_op: expected 4 coefficients");
  QMat m(8, 8);
  const auto place = [&](int from, int to, const Rat& v) {
    m.at(to, from) = v;
    m.at(from, to) = -v;
  };
  place(wrap7(i + 1), wrap7(i + 3), coeffs[0]);
  place(wrap7(i + 2), wrap7(i + 6), coeffs[1]);
  place(wrap7(i + 4), wrap7(i + 5), coeffs[2]);
  place(0, i, coeffs[3]);
  return m;
}

QVec reflect(const QVec& u, const QVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("reflect: length mismatch");
  const Rat uu = scalar_product(u, u);
  if (uu == 0) throw std::invalid_argument("reflect: u must be nonzero");
  const Rat factor = 2 * scalar_product(v, u) / uu;
  QVec out = v;
  for (std::size_t k = 0; k < u.size(); ++k) out[k] -= factor * u[k];
  return out;
}

const QVec& u1() {
  static const QVec u = {1, 1, 1, -1};
  return u;
}

const QVec& u2() {
  static const QVec u = {1, 1, 1, 1};
  return u;
}

QMat Representation::apply(const AlgebraElement& x) const {
  const QVec flat = algebra.flatten(x);
  QMat out(module_dim, module_dim);
  for (std::size_t a = 0; a < flat.size(); ++a) {
    if (flat[a] == 0) continue;
    for (int r = 0; r < module_dim; ++r)
      for (int c = 0; c < module_dim; ++c)
        if (mats[a].at(r, c) != 0) out.at(r, c) += flat[a] * mats[a].at(r, c);
  }
  return out;
}

namespace {

void require_gx(const GGAlgebra& algebra, const char* who) {
  if (algebra.mask()[0])
    throw std::invalid_argument(std::string(who) + ": algebra must live on G^x (neutral excluded)");
}

QVec unit(int d, int p) {
  QVec v(d, Rat(0));
  v[p] = 1;
  return v;
}

QMat drop_e0(const QMat& m) {
  QMat r(7, 7);
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) r.at(a, b) = m.at(a + 1, b + 1);
  return r;
}

}  // namespace

Representation rho(int k, const GGAlgebra& d4_on_gx) {
  if (k < 1 || k > 3) throw std::invalid_argument("rho: k must be 1, 2 or 3");
  if (d4_on_gx.d() != 4) throw std::invalid_argument("rho: expects the d = 4 algebra");
  require_gx(d4_on_gx, "rho");
  Representation rep{"rho" + std::to_string(k), d4_on_gx, 8, {}};
  rep.mats.reserve(d4_on_gx.dim());
  for (int a = 0; a < d4_on_gx.dim(); ++a) {
    auto [i, p] = d4_on_gx.basis_label(a);
    QVec v = unit(4, p);
    if (k == 2) v = reflect(u1(), v);
    if (k == 3) v = reflect(u2(), v);
    rep.mats.push_back(delta_op(i, v));
  }
  return rep;
}

Representation rho7(Rho7 which, const GGAlgebra& algebra_on_gx) {
  require_gx(algebra_on_gx, "rho7");
  const bool is_g2 = which == Rho7::g2;
  if (!is_g2 && algebra_on_gx.d() != 3)
    throw std::invalid_argument("rho7: the b3 flavour expects d = 3");
  if (is_g2 && algebra_on_gx.d() != 2)
    throw std::invalid_argument("rho7: the g2 flavour expects d = 2 over {s1, s2}");
  Representation rep{is_g2 ? "rho_g2" : "rho_b3", algebra_on_gx, 7, {}};
  for (int a = 0; a < algebra_on_gx.dim(); ++a) {
    auto [i, p] = algebra_on_gx.basis_label(a);
    QVec abc = is_g2 ? catalog::g2_basis()[p] : unit(3, p);
    abc.push_back(Rat(0));
    rep.mats.push_back(drop_e0(delta_op(i, abc)));
  }
  return rep;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.mats.size() != b.mats.size())
    throw std::invalid_argument("direct_sum: representations of different algebras");
  Representation rep{a.name + "+" + b.name, a.algebra, a.module_dim + b.module_dim, {}};
  for (std::size_t t = 0; t < a.mats.size(); ++t) {
    QMat m(rep.module_dim, rep.module_dim);
    for (int r = 0; r < a.module_dim; ++r)
      for (int c = 0; c < a.module_dim; ++c) m.at(r, c) = a.mats[t].at(r, c);
    for (int r = 0; r < b.module_dim; ++r)
      for (int c = 0; c < b.module_dim; ++c)
        m.at(a.module_dim + r, a.module_dim + c) = b.mats[t].at(r, c);
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

HomReport verify_homomorphism(const Representation& rep) {
  HomReport report;
  const BasisLie lie = structure_constants(rep.algebra);
  const int n = lie.n;
  const int m = rep.module_dim;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      QMat lhs(m, m);
      const QVec& w = lie.bk(a, b);
      for (int t = 0; t < n; ++t) {
        if (w[t] == 0) continue;
        for (int r = 0; r < m; ++r)
          for (int c = 0; c < m; ++c)
            if (rep.mats[t].at(r, c) != 0) lhs.at(r, c) += w[t] * rep.mats[t].at(r, c);
      }
      const QMat rhs = rep.mats[a] * rep.mats[b] - rep.mats[b] * rep.mats[a];
      if (!(lhs == rhs)) report.violations.push_back({a, b});
    }
  return report;
}

int intertwiner_dim(const Representation& a, const Representation& b) {
  if (a.algebra.dim() != b.algebra.dim())
    throw std::invalid_argument("intertwiner_dim: different source algebras");
  const int n = a.algebra.dim();
  const int ma = a.module_dim, mb = b.module_dim;
  // Unknown T is mb x ma with T rho_a(x) = rho_b(x) T for every basis x.
  QMat system(n * mb * ma, mb * ma);
  int row = 0;
  for (int t = 0; t < n; ++t) {
    const QMat& A = a.mats[t];
    const QMat& B = b.mats[t];
    for (int r = 0; r < mb; ++r)
      for (int c = 0; c < ma; ++c) {
        // (T A - B T)[r][c] = sum_k T[r][k] A[k][c] - sum_k B[r][k] T[k][c]
        for (int k = 0; k < ma; ++k)
          if (A.at(k, c) != 0) system.at(row, r * ma + k) += A.at(k, c);
        for (int k = 0; k < mb; ++k)
          if (B.at(r, k) != 0) system.at(row, k * ma + c) -= B.at(r, k);
        ++row;
      }
  }
  return mb * ma - system.rank();
}

bool verify_irreducible(const Representation& rep) {
  const int m = rep.module_dim;
  for (int w = 0; w < m; ++w) {
    QVec start(m, Rat(0));
    start[w] = 1;
    Subspace span = Subspace::span(m, {start});
    while (true) {
      std::vector<QVec> gens;
      for (int r = 0; r < span.dim(); ++r) gens.push_back(span.basis_vector(r));
      for (const QMat& op : rep.mats)
        for (int r = 0; r < span.dim(); ++r) gens.push_back(op * span.basis_vector(r));
      Subspace next = Subspace::span(m, gens);
      if (next.dim() == span.dim()) break;
      span = std::move(next);
    }
    if (span.dim() != m) return false;
  }
  return true;
}

AlgebraElement Automorphism::apply(const AlgebraElement& x) const {
  return algebra.unflatten(matrix * algebra.flatten(x));
}

Automorphism coefficient_automorphism(const GGAlgebra& algebra, const QMat& coeff_map) {
  const int d = algebra.d();
  if (coeff_map.rows() != d || coeff_map.cols() != d)
    throw std::invalid_argument("coefficient_automorphism: coefficient map of wrong shape");
  QMat m(algebra.dim(), algebra.dim());
  for (int a = 0; a < algebra.dim(); ++a) {
    auto [i, p] = algebra.basis_label(a);
    for (int r = 0; r < d; ++r)
      if (coeff_map.at(r, p) != 0) m.at(algebra.flat_index(i, r), a) = coeff_map.at(r, p);
  }
  return Automorphism{algebra, std::move(m)};
}

bool is_bracket_automorphism(const Automorphism& a) {
  const int n = a.algebra.dim();
  if (a.matrix.rank() != n) return false;
  const BasisLie lie = structure_constants(a.algebra);
  for (int x = 0; x < n; ++x) {
    const QVec mx = a.matrix * a.algebra.flatten(a.algebra.basis_element(x));
    for (int y = x + 1; y < n; ++y) {
      const QVec my = a.matrix * a.algebra.flatten(a.algebra.basis_element(y));
      const QVec lhs = a.matrix * lie.bk(x, y);
      const AlgebraElement rhs =
          a.algebra.bracket(a.algebra.unflatten(mx), a.algebra.unflatten(my));
      if (a.algebra.unflatten(lhs) != rhs) return false;
    }
  }
  return true;
}

QMat triality_coeff_matrix() {
  QMat m(4, 4);
  const Rat h(1, 2);
  const int sign[4][4] = {{1, -1, -1, 1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {-1, -1, -1, -1}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.at(r, c) = Rat(sign[r][c]) * h;
  return m;
}

Automorphism triality(const GGAlgebra& d4_on_gx) {
  if (d4_on_gx.d() != 4) throw std::invalid_argument("triality: expects the d = 4 algebra");
  require_gx(d4_on_gx, "triality");
  return coefficient_automorphism(d4_on_gx, triality_coeff_matrix());
}

Subspace fixed_subalgebra(const Automorphism& a) {
  if (!is_bracket_automorphism(a))
    throw std::domain_error("fixed_subalgebra: map is not a bracket automorphism");
  const QMat diff = a.matrix - QMat::identity(a.algebra.dim());
  const QMat null_rows = diff.kernel();
  std::vector<QVec> gens;
  for (int r = 0; r < null_rows.rows(); ++r) gens.push_back(null_rows.row(r));
  return Subspace::span(a.algebra.dim(), gens);
}

}  // namespace gga::reps
