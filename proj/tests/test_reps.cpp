#include "gga/reps.hpp"

#include "gga/catalog.hpp"
#include "gga/fano.hpp"
#include "gga/ortho.hpp"

#include <doctest.h>

using namespace gga;
using fano::wrap7;
using reps::Rho7;

namespace {

GGAlgebra d4gx() { return catalog::make("d4", catalog::Mask::gx); }

QMat reflection_matrix(const QVec& u) {
  const int d = static_cast<int>(u.size());
  QMat m(d, d);
  for (int p = 0; p < d; ++p) {
    QVec e(d, Rat(0));
    e[p] = 1;
    const QVec img = reps::reflect(u, e);
    for (int r = 0; r < d; ++r) m.at(r, p) = img[r];
  }
  return m;
}

}  // namespace

TEST_CASE("delta operators") {
  CHECK(reps::delta_op(1, {1, 0, 0, 0}) == ortho::phi_units(8, 2, 4));
  for (int i = 1; i <= 7; ++i) {
    CHECK(reps::delta_op(i, {0, 0, 0, 0}).is_zero());
    const QMat m = reps::delta_op(i, {1, -2, Rat(1, 2), 3});
    CHECK(m + m.transposed() == QMat(8, 8));  // skew
  }
}

TEST_CASE("reflections") {
  CHECK(reps::reflect({1, 1, 1, 1}, {1, 1, 1, 1}) == QVec{-1, -1, -1, -1});
  CHECK(reps::reflect({1, 1, 1, -1}, {0, 0, 0, 1}) ==
        QVec{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  CHECK(reps::reflect({1, 1, 1, 1}, {1, -1, 0, 0}) == QVec{1, -1, 0, 0});  // v perp u
  const QVec v = {3, -1, Rat(2, 5), 7};
  CHECK(reps::reflect(reps::u1(), reps::reflect(reps::u1(), v)) == v);  // involution
  CHECK_THROWS_AS(reps::reflect({0, 0, 0, 0}, v), std::invalid_argument);
}

TEST_CASE("the familiar closed forms of rho2 and rho3") {
  for (int p = 0; p < 4; ++p) {
    QVec v(4, Rat(0));
    v[p] = 1;
    const Rat a = v[0], b = v[1], c = v[2], d = v[3];
    CHECK(reps::reflect(reps::u1(), v) ==
          QVec{(a - b - c + d) / 2, (-a + b - c + d) / 2, (-a - b + c + d) / 2,
               (a + b + c + d) / 2});
    CHECK(reps::reflect(reps::u2(), v) ==
          QVec{(a - b - c - d) / 2, (-a + b - c - d) / 2, (-a - b + c - d) / 2,
               (-a - b - c + d) / 2});
  }
}

TEST_CASE("rho examples") {
  const GGAlgebra A = d4gx();
  const auto rho1 = reps::rho(1, A);
  const auto rho2 = reps::rho(2, A);
  const auto rho3 = reps::rho(3, A);

  CHECK(rho1.apply(AlgebraElement::monomial(1, {1, 0, 0, 0})) == ortho::phi_units(8, 2, 4));

  const QVec half = {Rat(-1, 2), Rat(-1, 2), Rat(-1, 2), Rat(1, 2)};
  for (int i = 1; i <= 7; ++i)
    CHECK(rho3.apply(AlgebraElement::monomial(i, {0, 0, 0, 1})) == reps::delta_op(i, half));

  // a + b + c - d = 0: the reflection fixes the vector
  const QVec fixed = {1, 1, 0, 2};
  CHECK(rho2.apply(AlgebraElement::monomial(3, fixed)) == reps::delta_op(3, fixed));

  CHECK_THROWS_AS(reps::rho(1, catalog::make("d4", catalog::Mask::full)), std::invalid_argument);
  CHECK_THROWS_AS(reps::rho(4, A), std::invalid_argument);
}

TEST_CASE("homomorphism checks") {
  const GGAlgebra A = d4gx();
  for (int k = 1; k <= 3; ++k) CHECK(reps::verify_homomorphism(reps::rho(k, A)).ok());
  CHECK(reps::verify_homomorphism(reps::rho7(Rho7::b3, catalog::make("b3", catalog::Mask::gx))).ok());
  CHECK(reps::verify_homomorphism(reps::rho7(Rho7::g2, catalog::make("g2", catalog::Mask::gx))).ok());

  // negating one operator breaks it
  auto broken = reps::rho(1, A);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) broken.mats[0].at(r, c) = -broken.mats[0].at(r, c);
  CHECK(!reps::verify_homomorphism(broken).ok());
}

TEST_CASE("rho_b3 on zero is zero") {
  const auto rep = reps::rho7(Rho7::b3, catalog::make("b3", catalog::Mask::gx));
  CHECK(rep.apply(AlgebraElement::zero(3)).is_zero());
  CHECK(rep.module_dim == 7);
}

TEST_CASE("rho_g2 closed form in the basis B_i") {
  const auto rep = reps::rho7(Rho7::g2, catalog::make("g2", catalog::Mask::gx));
  // In B_i = {e_i, ..., e_{i+6}}:
  //   s1: (a0..a6) -> (0, 0, -a6, 0, a5, -a4, a2)
  //   s2: (a0..a6) -> (0, -2 a3, a6, 2 a1, a5, -a4, -a2)
  auto expected = [&](int i, int p) {
    QMat e(7, 7);
    auto put = [&](int out, int in, int val) {
      e.at(wrap7(i + out) - 1, wrap7(i + in) - 1) = val;
    };
    if (p == 0) {
      put(2, 6, -1);
      put(4, 5, 1);
      put(5, 4, -1);
      put(6, 2, 1);
    } else {
      put(1, 3, -2);
      put(2, 6, 1);
      put(3, 1, 2);
      put(4, 5, 1);
      put(5, 4, -1);
      put(6, 2, -1);
    }
    return e;
  };
  for (int i = 1; i <= 7; ++i)
    for (int p = 0; p < 2; ++p) {
      QVec coeff(2, Rat(0));
      coeff[p] = 1;
      CHECK(rep.apply(AlgebraElement::monomial(i, coeff)) == expected(i, p));
    }
}

TEST_CASE("intertwiner dimensions separate rho1, rho2, rho3") {
  const GGAlgebra A = d4gx();
  const auto r1 = reps::rho(1, A), r2 = reps::rho(2, A), r3 = reps::rho(3, A);
  CHECK(reps::intertwiner_dim(r1, r2) == 0);
  CHECK(reps::intertwiner_dim(r1, r3) == 0);
  CHECK(reps::intertwiner_dim(r2, r3) == 0);
  CHECK(reps::intertwiner_dim(r1, r1) == 1);
  CHECK(reps::intertwiner_dim(r2, r2) == 1);
  CHECK(reps::intertwiner_dim(r3, r3) == 1);
}

TEST_CASE("irreducibility") {
  const GGAlgebra A = d4gx();
  const auto r1 = reps::rho(1, A);
  CHECK(reps::verify_irreducible(r1));
  CHECK(reps::verify_irreducible(reps::rho(2, A)));
  CHECK(reps::verify_irreducible(reps::rho(3, A)));
  CHECK(reps::verify_irreducible(reps::rho7(Rho7::b3, catalog::make("b3", catalog::Mask::gx))));
  CHECK(reps::verify_irreducible(reps::rho7(Rho7::g2, catalog::make("g2", catalog::Mask::gx))));

  const auto doubled = reps::direct_sum(r1, r1);
  CHECK(doubled.module_dim == 16);
  CHECK(!reps::verify_irreducible(doubled));
  CHECK(reps::verify_homomorphism(doubled).ok());
  CHECK(reps::intertwiner_dim(doubled, doubled) == 4);
}

TEST_CASE("reflection lifts are order-2 automorphisms and compose to theta") {
  const GGAlgebra A = d4gx();
  const auto lift1 = reps::coefficient_automorphism(A, reflection_matrix(reps::u1()));
  const auto lift2 = reps::coefficient_automorphism(A, reflection_matrix(reps::u2()));
  CHECK(reps::is_bracket_automorphism(lift1));
  CHECK(reps::is_bracket_automorphism(lift2));
  CHECK(lift1.matrix * lift1.matrix == QMat::identity(A.dim()));
  CHECK(lift2.matrix * lift2.matrix == QMat::identity(A.dim()));

  // apply the u2 reflection first, then u1: that is the printed theta matrix
  const auto theta = reps::triality(A);
  CHECK(lift1.matrix * lift2.matrix == theta.matrix);
}

TEST_CASE("twist equivariance of the reflections") {
  const TwistTable t = catalog::sigma_d4();
  for (const QVec& u : {reps::u1(), reps::u2()})
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) {
        if (i == j) continue;
        for (int p = 0; p < 4; ++p)
          for (int q = 0; q < 4; ++q) {
            QVec v(4, Rat(0)), w(4, Rat(0));
            v[p] = 1;
            w[q] = 1;
            CHECK(t.apply(i, j, reps::reflect(u, v), reps::reflect(u, w)) ==
                  reps::reflect(u, t.apply(i, j, v, w)));
          }
      }
}

TEST_CASE("triality") {
  const GGAlgebra A = d4gx();
  const auto theta = reps::triality(A);

  // first column of the printed matrix
  CHECK(theta.apply(AlgebraElement::monomial(1, {1, 0, 0, 0})) ==
        AlgebraElement::monomial(1, {Rat(1, 2), Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}));

  CHECK(reps::is_bracket_automorphism(theta));
  CHECK(theta.matrix * theta.matrix * theta.matrix == QMat::identity(A.dim()));

  const Subspace fix = reps::fixed_subalgebra(theta);
  CHECK(fix.dim() == 14);

  // Fix(theta) = {(a,b,c,d) g_i : a + b + c = d = 0}
  std::vector<QVec> gens;
  for (int i = 1; i <= 7; ++i)
    for (const QVec& s : {QVec{0, 1, -1, 0}, QVec{2, -1, -1, 0}}) {
      QVec v(A.dim(), Rat(0));
      for (int p = 0; p < 4; ++p) v[A.flat_index(i, p)] = s[p];
      gens.push_back(v);
    }
  CHECK(fix == Subspace::span(A.dim(), gens));

  // elements of S x {0} are fixed pointwise
  CHECK(theta.apply(AlgebraElement::monomial(5, {0, 1, -1, 0})) ==
        AlgebraElement::monomial(5, {0, 1, -1, 0}));

  // bracket-closed, and the fingerprint matches the g2 algebra
  CHECK(bracket_closed(A, fix));
  CHECK(subalgebra_fingerprint(A, fix) == fingerprint(catalog::make("g2", catalog::Mask::gx)));

  // Fix(identity) is everything
  const reps::Automorphism id{A, QMat::identity(A.dim())};
  CHECK(reps::fixed_subalgebra(id) == Subspace::whole(A.dim()));

  // a non-automorphism is rejected
  QMat stretch = QMat::identity(4);
  stretch.at(0, 0) = 2;
  CHECK_THROWS_AS(reps::fixed_subalgebra(reps::coefficient_automorphism(A, stretch)),
                  std::domain_error);
}
