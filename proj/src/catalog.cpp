#include "gga/catalog.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace gga::catalog {

namespace {

using Pattern = QVec (*)(const QVec&, const QVec&);

// Offset patterns of the dimension-4 twist; r = (a1,a2,a3,a4), s = (b1,..,b4).
QVec d4_off1(const QVec& r, const QVec& s) {
  return {-r[1] * s[0] - r[2] * s[2], -r[1] * s[2] - r[2] * s[0], r[0] * s[1] + r[3] * s[3],
          r[0] * s[3] + r[3] * s[1]};
}
QVec d4_off2(const QVec& r, const QVec& s) {
  return {r[1] * s[2] + r[3] * s[3], -r[0] * s[0] - r[2] * s[1], -r[0] * s[1] - r[2] * s[0],
          r[1] * s[3] + r[3] * s[2]};
}
QVec d4_off4(const QVec& r, const QVec& s) {
  return {-r[0] * s[1] - r[1] * s[2], r[2] * s[0] + r[3] * s[3], -r[0] * s[2] - r[1] * s[1],
          r[2] * s[3] + r[3] * s[0]};
}

// Three-coordinate patterns (the b3 case).
QVec b3_off1(const QVec& r, const QVec& s) {
  return {-r[1] * s[0] - r[2] * s[2], -r[1] * s[2] - r[2] * s[0], r[0] * s[1]};
}
QVec b3_off2(const QVec& r, const QVec& s) {
  return {r[1] * s[2], -r[0] * s[0] - r[2] * s[1], -r[0] * s[1] - r[2] * s[0]};
}
QVec b3_off4(const QVec& r, const QVec& s) {
  return {-r[0] * s[1] - r[1] * s[2], r[2] * s[0], -r[0] * s[2] - r[1] * s[1]};
}

QVec unit_vec(int d, int p) {
  QVec v(d, Rat(0));
  v[p] = 1;
  return v;
}

// Fills sigma_{i,i+k} from the offset-1/2/4 patterns; offsets 3, 5, 6 come
// from sigma_{i,i+3}(r,s) = -sigma_{i,i+4}(s,r) and the two companion rules.
TwistTable from_patterns(int d, Pattern off1, Pattern off2, Pattern off4) {
  TwistTable twist(d);
  auto eval = [&](int off, const QVec& r, const QVec& s) -> QVec {
    switch (off) {
      case 1: return off1(r, s);
      case 2: return off2(r, s);
      case 4: return off4(r, s);
      case 3: {
        QVec v = off4(s, r);
        for (Rat& x : v) x = -x;
        return v;
      }
      case 5: {
        QVec v = off2(s, r);
        for (Rat& x : v) x = -x;
        return v;
      }
      case 6: {
        QVec v = off1(s, r);
        for (Rat& x : v) x = -x;
        return v;
      }
      default: throw std::logic_error("bad offset");
    }
  };
  for (int i = 1; i <= 7; ++i)
    for (int off = 1; off <= 6; ++off) {
      const int j = fano::wrap7(i + off);
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q) {
          const QVec v = eval(off, unit_vec(d, p), unit_vec(d, q));
          for (int r = 0; r < d; ++r)
            if (v[r] != 0) twist.set_entry(i, j, p, q, r, v[r]);
        }
    }
  twist.normalize();
  return twist;
}

}  // namespace

TwistTable sigma_d4() {
  static const TwistTable twist = from_patterns(4, d4_off1, d4_off2, d4_off4);
  return twist;
}

TwistTable sigma_b3() {
  static const TwistTable twist = from_patterns(3, b3_off1, b3_off2, b3_off4);
  return twist;
}

const std::array<QVec, 2>& g2_basis() {
  static const std::array<QVec, 2> basis = {QVec{0, 1, -1}, QVec{2, -1, -1}};
  return basis;
}

TwistTable sigma_g2() {
  static const TwistTable twist = [] {
    const GGAlgebra b3("b3", sigma_b3(), mask_bits(Mask::full));
    return restrict_coefficients(b3, {g2_basis()[0], g2_basis()[1]}, "g2").twist();
  }();
  return twist;
}

std::array<bool, 8> mask_bits(Mask mask) {
  std::array<bool, 8> bits{};
  for (int i = 0; i < 8; ++i) bits[i] = true;
  if (mask == Mask::gx) bits[0] = false;
  return bits;
}

GGAlgebra make(std::string_view name, Mask mask) {
  const std::string suffix = (mask == Mask::gx) ? "/gx" : "/full";
  if (name == "d4") return GGAlgebra("d4" + suffix, sigma_d4(), mask_bits(mask));
  if (name == "b3") return GGAlgebra("b3" + suffix, sigma_b3(), mask_bits(mask));
  if (name == "g2") return GGAlgebra("g2" + suffix, sigma_g2(), mask_bits(mask));
  throw std::invalid_argument("unknown catalog algebra: " + std::string(name));
}

// ---------------------------------------------------------------------------
// Scalar twists

FiniteAbelianGroup z2_cubed() {
  FiniteAbelianGroup g;
  g.add.assign(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) g.add[i][j] = fano::star(i, j);
  return g;
}

FiniteAbelianGroup zn_squared(int n) {
  FiniteAbelianGroup g;
  const int m = n * n;
  g.add.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      g.add[i][j] = ((i / n + j / n) % n) * n + (i % n + j % n) % n;
  return g;
}

ScalarTwist zero_scalar_twist(FiniteAbelianGroup group) {
  ScalarTwist t;
  const int m = group.order();
  t.group = std::move(group);
  t.value.assign(m, std::vector<Rat>(m, Rat(0)));
  return t;
}

ScalarTwist constant_scalar_twist(FiniteAbelianGroup group, Rat value) {
  ScalarTwist t = zero_scalar_twist(std::move(group));
  for (auto& row : t.value)
    for (Rat& x : row) x = value;
  return t;
}

ScalarTwist gl2_scalar_twist() {
  ScalarTwist t = zero_scalar_twist(zn_squared(2));
  auto sign = [](int e) { return (e % 2 == 0) ? Rat(1) : Rat(-1); };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int a1 = i / 2, a2 = i % 2, b1 = j / 2, b2 = j % 2;
      t.value[i][j] = sign(a2 * b1) - sign(a1 * b2);
    }
  return t;
}

LieCheckReport verify_scalar_lie(const ScalarTwist& twist) {
  LieCheckReport report;
  const int m = twist.group.order();
  for (int g = 0; g < m; ++g)
    for (int h = g; h < m; ++h)
      if (twist.value[g][h] + twist.value[h][g] != 0) report.skew_violations.push_back({g, h});
  for (int g = 0; g < m; ++g)
    for (int h = g; h < m; ++h)
      for (int k = h; k < m; ++k) {
        const Rat cyc = twist.value[g][h] * twist.value[twist.group.add[g][h]][k] +
                        twist.value[h][k] * twist.value[twist.group.add[h][k]][g] +
                        twist.value[k][g] * twist.value[twist.group.add[k][g]][h];
        if (cyc != 0) report.jacobi_violations.push_back({g, h, k});
      }
  return report;
}

// ---------------------------------------------------------------------------
// gl_n floating check

GlnReport gln_check(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("gln_check: n must be in 2..6");
  using C = std::complex<double>;
  using Mat = std::vector<std::vector<C>>;
  const double pi = 3.14159265358979323846;
  const C xi = std::polar(1.0, 2.0 * pi / n);

  auto zero = [&] { return Mat(n, std::vector<C>(n, C(0))); };
  auto mul = [&](const Mat& a, const Mat& b) {
    Mat r = zero();
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    return r;
  };
  Mat X = zero(), Y = zero(), I = zero();
  for (int i = 0; i < n; ++i) {
    X[i][i] = std::pow(xi, i);
    Y[i][(i + 1) % n] = 1.0;
    I[i][i] = 1.0;
  }
  auto power = [&](const Mat& m, int e) {
    Mat r = I;
    for (int t = 0; t < e; ++t) r = mul(r, m);
    return r;
  };
  auto word = [&](int a1, int a2) { return mul(power(X, a1), power(Y, a2)); };

  GlnReport report;
  report.n = n;
  for (int a1 = 0; a1 < n; ++a1)
    for (int a2 = 0; a2 < n; ++a2)
      for (int b1 = 0; b1 < n; ++b1)
        for (int b2 = 0; b2 < n; ++b2) {
          const Mat A = word(a1, a2), B = word(b1, b2);
          const Mat AB = mul(A, B), BA = mul(B, A);
          const C scale = std::pow(xi, a2 * b1) - std::pow(xi, a1 * b2);
          const Mat W = word((a1 + b1) % n, (a2 + b2) % n);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              const double dev = std::abs(AB[i][j] - BA[i][j] - scale * W[i][j]);
              report.max_deviation = std::max(report.max_deviation, dev);
            }
        }
  return report;
}

}  // namespace gga::catalog
