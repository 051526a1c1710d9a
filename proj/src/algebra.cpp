#include "gga/algebra.hpp"

#include <json.hpp>

#include <stdexcept>

namespace gga {

namespace {

void axpy(QVec& acc, const Rat& s, const QVec& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) acc[k] += s * v[k];
}

std::vector<int> leading_cols(const QMat& rref_rows) {
  std::vector<int> lead(rref_rows.rows(), -1);
  for (int r = 0; r < rref_rows.rows(); ++r)
    for (int c = 0; c < rref_rows.cols(); ++c)
      if (rref_rows.at(r, c) != 0) {
        lead[r] = c;
        break;
      }
  return lead;
}

// Coordinates of w in an RREF basis: read off the pivot columns, then verify.
std::optional<QVec> rref_coords(const QMat& basis, const std::vector<int>& lead, const QVec& w) {
  QVec coords(basis.rows());
  QVec rest = w;
  for (int r = 0; r < basis.rows(); ++r) {
    if (lead[r] < 0) continue;
    coords[r] = w[lead[r]];
    if (coords[r] != 0)
      for (int c = 0; c < basis.cols(); ++c)
        if (basis.at(r, c) != 0) rest[c] -= coords[r] * basis.at(r, c);
  }
  if (!is_zero(rest)) return std::nullopt;
  return coords;
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement AlgebraElement::zero(int d) {
  AlgebraElement x;
  x.d = d;
  for (auto& c : x.comp) c.assign(d, Rat(0));
  return x;
}

AlgebraElement AlgebraElement::monomial(int i, QVec coeff) {
  AlgebraElement x = zero(static_cast<int>(coeff.size()));
  x.comp[i] = std::move(coeff);
  return x;
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : comp)
    if (!gga::is_zero(c)) return false;
  return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (d != o.d) throw std::invalid_argument("AlgebraElement: dimension mismatch");
  for (int i = 0; i < 8; ++i)
    for (int p = 0; p < d; ++p) comp[i][p] += o.comp[i][p];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (d != o.d) throw std::invalid_argument("AlgebraElement: dimension mismatch");
  for (int i = 0; i < 8; ++i)
    for (int p = 0; p < d; ++p) comp[i][p] -= o.comp[i][p];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rat& scalar) {
  for (int i = 0; i < 8; ++i)
    for (int p = 0; p < d; ++p) comp[i][p] *= scalar;
  return *this;
}

// ---------------------------------------------------------------------------
// TwistTable

int TwistTable::nonzero_pairs() const {
  int count = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (has(i, j)) ++count;
  return count;
}

void TwistTable::set_entry(int i, int j, int p, int q, int r, Rat value) {
  QVec& tensor = t_[i][j];
  if (tensor.empty()) tensor.assign(static_cast<std::size_t>(d_) * d_ * d_, Rat(0));
  tensor[(static_cast<std::size_t>(p) * d_ + q) * d_ + r] = std::move(value);
}

const Rat& TwistTable::entry(int i, int j, int p, int q, int r) const {
  static const Rat kZero(0);
  const QVec& tensor = t_[i][j];
  if (tensor.empty()) return kZero;
  return tensor[(static_cast<std::size_t>(p) * d_ + q) * d_ + r];
}

QVec TwistTable::apply(int i, int j, const QVec& r, const QVec& s) const {
  if (static_cast<int>(r.size()) != d_ || static_cast<int>(s.size()) != d_)
    throw std::invalid_argument("TwistTable::apply: coefficient dimension mismatch");
  QVec out(d_, Rat(0));
  const QVec& tensor = t_[i][j];
  if (tensor.empty()) return out;
  for (int p = 0; p < d_; ++p) {
    if (r[p] == 0) continue;
    for (int q = 0; q < d_; ++q) {
      if (s[q] == 0) continue;
      const Rat rs = r[p] * s[q];
      const std::size_t base = (static_cast<std::size_t>(p) * d_ + q) * d_;
      for (int k = 0; k < d_; ++k)
        if (tensor[base + k] != 0) out[k] += rs * tensor[base + k];
    }
  }
  return out;
}

void TwistTable::normalize() {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (!t_[i][j].empty() && is_zero(t_[i][j])) t_[i][j].clear();
}

// ---------------------------------------------------------------------------
// GGAlgebra

GGAlgebra::GGAlgebra(std::string name, TwistTable twist, const std::array<bool, 8>& mask)
    : name_(std::move(name)), twist_(std::move(twist)), mask_(mask) {
  if (twist_.dim() <= 0) throw std::invalid_argument("GGAlgebra: coefficient dimension must be positive");
  twist_.normalize();
  flat_base_.fill(-1);
  for (int i = 0; i < 8; ++i)
    if (mask_[i]) {
      flat_base_[i] = static_cast<int>(active_.size()) * d();
      active_.push_back(i);
    }
  for (int i : active_)
    for (int j : active_)
      if (twist_.has(i, j) && !mask_[fano::star(i, j)])
        throw std::domain_error("GGAlgebra: mask not closed under the twist at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
}

int GGAlgebra::flat_index(int i, int p) const {
  if (flat_base_[i] < 0) return -1;
  return flat_base_[i] + p;
}

std::pair<int, int> GGAlgebra::basis_label(int alpha) const {
  return {active_[alpha / d()], alpha % d()};
}

std::string GGAlgebra::basis_label_str(int alpha) const {
  auto [i, p] = basis_label(alpha);
  return "e" + std::to_string(p + 1) + "g" + std::to_string(i);
}

QVec GGAlgebra::flatten(const AlgebraElement& x) const {
  if (x.d != d()) throw std::invalid_argument("GGAlgebra: element dimension mismatch");
  QVec v(dim(), Rat(0));
  for (int i = 0; i < 8; ++i) {
    if (mask_[i]) {
      for (int p = 0; p < d(); ++p) v[flat_base_[i] + p] = x.comp[i][p];
    } else if (!x.component_zero(i)) {
      throw std::invalid_argument("GGAlgebra: element supported outside the mask");
    }
  }
  return v;
}

AlgebraElement GGAlgebra::unflatten(const QVec& v) const {
  if (static_cast<int>(v.size()) != dim())
    throw std::invalid_argument("GGAlgebra: flat vector of wrong length");
  AlgebraElement x = AlgebraElement::zero(d());
  for (std::size_t a = 0; a < v.size(); ++a) {
    auto [i, p] = basis_label(static_cast<int>(a));
    x.comp[i][p] = v[a];
  }
  return x;
}

AlgebraElement GGAlgebra::basis_element(int alpha) const {
  QVec v(dim(), Rat(0));
  v[alpha] = 1;
  return unflatten(v);
}

AlgebraElement GGAlgebra::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  if (x.d != d() || y.d != d())
    throw std::invalid_argument("GGAlgebra::bracket: element dimension mismatch");
  for (int i = 0; i < 8; ++i)
    if (!mask_[i] && (!x.component_zero(i) || !y.component_zero(i)))
      throw std::invalid_argument("GGAlgebra::bracket: element supported outside the mask");
  AlgebraElement out = AlgebraElement::zero(d());
  for (int i : active_) {
    if (x.component_zero(i)) continue;
    for (int j : active_) {
      if (y.component_zero(j) || !twist_.has(i, j)) continue;
      const QVec v = twist_.apply(i, j, x.comp[i], y.comp[j]);
      QVec& target = out.comp[fano::star(i, j)];
      for (int k = 0; k < d(); ++k) target[k] += v[k];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure constants

BasisLie structure_constants(const GGAlgebra& algebra) {
  const int n = algebra.dim();
  const int d = algebra.d();
  BasisLie lie;
  lie.n = n;
  lie.table.assign(static_cast<std::size_t>(n) * n, QVec(n, Rat(0)));
  for (int a = 0; a < n; ++a) {
    auto [i, p] = algebra.basis_label(a);
    for (int b = 0; b < n; ++b) {
      auto [j, q] = algebra.basis_label(b);
      if (!algebra.twist().has(i, j)) continue;
      const int k = fano::star(i, j);
      QVec& out = lie.table[static_cast<std::size_t>(a) * n + b];
      for (int r = 0; r < d; ++r) {
        const Rat& c = algebra.twist().entry(i, j, p, q, r);
        if (c != 0) out[algebra.flat_index(k, r)] = c;
      }
    }
  }
  return lie;
}

bool bracket_closed(const GGAlgebra& algebra, const Subspace& subspace) {
  const std::vector<int> lead = leading_cols(subspace.basis());
  for (int a = 0; a < subspace.dim(); ++a)
    for (int b = 0; b < subspace.dim(); ++b) {
      const AlgebraElement w = algebra.bracket(algebra.unflatten(subspace.basis_vector(a)),
                                               algebra.unflatten(subspace.basis_vector(b)));
      if (!rref_coords(subspace.basis(), lead, algebra.flatten(w))) return false;
    }
  return true;
}

BasisLie structure_constants(const GGAlgebra& algebra, const Subspace& subalgebra) {
  if (subalgebra.ambient() != algebra.dim())
    throw std::invalid_argument("structure_constants: subspace of wrong ambient dimension");
  const int n = subalgebra.dim();
  const std::vector<int> lead = leading_cols(subalgebra.basis());
  BasisLie lie;
  lie.n = n;
  lie.table.assign(static_cast<std::size_t>(n) * n, QVec(n, Rat(0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const AlgebraElement w = algebra.bracket(algebra.unflatten(subalgebra.basis_vector(a)),
                                               algebra.unflatten(subalgebra.basis_vector(b)));
      auto coords = rref_coords(subalgebra.basis(), lead, algebra.flatten(w));
      if (!coords) throw std::domain_error("structure_constants: subspace is not bracket-closed");
      lie.table[static_cast<std::size_t>(a) * n + b] = std::move(*coords);
    }
  return lie;
}

// ---------------------------------------------------------------------------
// Lie axioms

LieCheckReport verify_lie(const BasisLie& lie) {
  LieCheckReport report;
  const int n = lie.n;
  std::vector<char> nonzero(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) nonzero[a * n + b] = !is_zero(lie.bk(a, b));

  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      if (!nonzero[a * n + b] && !nonzero[b * n + a]) continue;
      QVec sum = lie.bk(a, b);
      axpy(sum, Rat(1), lie.bk(b, a));
      if (!is_zero(sum)) report.skew_violations.push_back({a, b});
    }

  QVec sum(n, Rat(0));
  auto add_ad = [&](int a, const QVec& v) {
    for (int t = 0; t < n; ++t)
      if (v[t] != 0 && nonzero[a * n + t]) axpy(sum, v[t], lie.bk(a, t));
  };
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) {
        const bool bc = nonzero[b * n + c], ca = nonzero[c * n + a], ab = nonzero[a * n + b];
        if (!bc && !ca && !ab) continue;
        for (Rat& x : sum) x = 0;
        if (bc) add_ad(a, lie.bk(b, c));
        if (ca) add_ad(b, lie.bk(c, a));
        if (ab) add_ad(c, lie.bk(a, b));
        if (!is_zero(sum)) report.jacobi_violations.push_back({a, b, c});
      }
  return report;
}

LieCheckReport verify_lie(const GGAlgebra& algebra) { return verify_lie(structure_constants(algebra)); }

// ---------------------------------------------------------------------------
// Center, series, Killing

Subspace center(const BasisLie& lie) {
  const int n = lie.n;
  QMat system(n * n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const QVec& w = lie.bk(a, b);
      for (int r = 0; r < n; ++r)
        if (w[r] != 0) system.at(b * n + r, a) = w[r];
    }
  const QMat null_rows = system.kernel();
  std::vector<QVec> gens;
  gens.reserve(null_rows.rows());
  for (int r = 0; r < null_rows.rows(); ++r) gens.push_back(null_rows.row(r));
  return Subspace::span(n, gens);
}

Subspace center(const GGAlgebra& algebra) { return center(structure_constants(algebra)); }

namespace {

QVec span_bracket(const BasisLie& lie, const QVec& u, const QVec& v) {
  QVec out(lie.n, Rat(0));
  for (int a = 0; a < lie.n; ++a) {
    if (u[a] == 0) continue;
    for (int b = 0; b < lie.n; ++b)
      if (v[b] != 0) axpy(out, u[a] * v[b], lie.bk(a, b));
  }
  return out;
}

Subspace product_span(const BasisLie& lie, const Subspace& left, const Subspace& right) {
  std::vector<QVec> gens;
  gens.reserve(static_cast<std::size_t>(left.dim()) * right.dim());
  for (int a = 0; a < left.dim(); ++a)
    for (int b = 0; b < right.dim(); ++b)
      gens.push_back(span_bracket(lie, left.basis_vector(a), right.basis_vector(b)));
  return Subspace::span(lie.n, gens);
}

}  // namespace

std::vector<Subspace> series(const BasisLie& lie, SeriesKind kind) {
  std::vector<Subspace> chain;
  chain.push_back(Subspace::whole(lie.n));
  while (true) {
    const Subspace& prev = chain.back();
    const Subspace& left = (kind == SeriesKind::derived) ? prev : chain.front();
    Subspace next = product_span(lie, left, prev);
    const bool stop = next.dim() == prev.dim() || next.dim() == 0;
    chain.push_back(std::move(next));
    if (stop) break;
  }
  return chain;
}

std::vector<Subspace> series(const GGAlgebra& algebra, SeriesKind kind) {
  return series(structure_constants(algebra), kind);
}

QMat killing(const BasisLie& lie) {
  const int n = lie.n;
  // Dense ad matrices plus nonzero lists; tr(ad_a ad_b) walks nnz(ad_a).
  struct Entry {
    int r, c;
  };
  std::vector<QMat> ad(n);
  std::vector<std::vector<Entry>> nnz(n);
  for (int a = 0; a < n; ++a) {
    ad[a] = QMat(n, n);
    for (int b = 0; b < n; ++b) {
      const QVec& w = lie.bk(a, b);
      for (int r = 0; r < n; ++r)
        if (w[r] != 0) {
          ad[a].at(r, b) = w[r];
          nnz[a].push_back({r, b});
        }
    }
  }
  QMat gram(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Rat acc = 0;
      for (const Entry& e : nnz[a]) {
        const Rat& other = ad[b].at(e.c, e.r);
        if (other != 0) acc += ad[a].at(e.r, e.c) * other;
      }
      gram.at(a, b) = acc;
      gram.at(b, a) = acc;
    }
  return gram;
}

QMat killing(const GGAlgebra& algebra) { return killing(structure_constants(algebra)); }

Subspace killing_radical(const BasisLie& lie) {
  const QMat null_rows = killing(lie).kernel();
  std::vector<QVec> gens;
  for (int r = 0; r < null_rows.rows(); ++r) gens.push_back(null_rows.row(r));
  return Subspace::span(lie.n, gens);
}

Subspace killing_radical(const GGAlgebra& algebra) {
  return killing_radical(structure_constants(algebra));
}

// ---------------------------------------------------------------------------
// Coefficient restriction

GGAlgebra restrict_coefficients(const GGAlgebra& algebra, const std::vector<QVec>& basis,
                                std::string name) {
  const int d = algebra.d();
  const int k = static_cast<int>(basis.size());
  if (k == 0) throw std::invalid_argument("restrict_coefficients: empty basis");
  QMat rows(k, d);
  for (int r = 0; r < k; ++r) {
    if (static_cast<int>(basis[r].size()) != d)
      throw std::invalid_argument("restrict_coefficients: basis vector of wrong length");
    rows.set_row(r, basis[r]);
  }
  if (rows.rank() != k)
    throw std::invalid_argument("restrict_coefficients: basis is linearly dependent");

  TwistTable twist(k);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (!algebra.twist().has(i, j)) continue;
      for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
          const QVec w = algebra.twist().apply(i, j, basis[p], basis[q]);
          auto coords = solve_in_span(basis, w);
          if (!coords)
            throw std::domain_error("restrict_coefficients: sigma_{" + std::to_string(i) + "," +
                                    std::to_string(j) + "} leaves the span");
          for (int r = 0; r < k; ++r)
            if ((*coords)[r] != 0) twist.set_entry(i, j, p, q, r, (*coords)[r]);
        }
    }
  if (name.empty()) name = algebra.name() + "|restricted";
  return GGAlgebra(std::move(name), std::move(twist), algebra.mask());
}

// ---------------------------------------------------------------------------
// Fingerprint

Fingerprint fingerprint(const BasisLie& lie) {
  Fingerprint fp;
  fp.dim = lie.n;
  fp.center_dim = center(lie).dim();
  for (const Subspace& s : series(lie, SeriesKind::derived)) fp.derived_dims.push_back(s.dim());
  for (const Subspace& s : series(lie, SeriesKind::lower_central))
    fp.lower_central_dims.push_back(s.dim());
  fp.killing_rank = killing(lie).rank();
  fp.solvable = fp.derived_dims.back() == 0;
  fp.nilpotent = fp.lower_central_dims.back() == 0;
  fp.abelian = fp.derived_dims.size() > 1 && fp.derived_dims[1] == 0;
  if (fp.solvable) fp.solvable_length = static_cast<int>(fp.derived_dims.size()) - 1;
  if (fp.nilpotent) fp.nilpotency_class = static_cast<int>(fp.lower_central_dims.size()) - 1;
  return fp;
}

Fingerprint fingerprint(const GGAlgebra& algebra) { return fingerprint(structure_constants(algebra)); }

Fingerprint subalgebra_fingerprint(const GGAlgebra& algebra, const Subspace& subalgebra) {
  return fingerprint(structure_constants(algebra, subalgebra));
}

// ---------------------------------------------------------------------------
// JSON persistence

std::string algebra_to_json(const GGAlgebra& algebra) {
  nlohmann::ordered_json j;
  j["name"] = algebra.name();
  j["d"] = algebra.d();
  j["mask"] = algebra.active();
  nlohmann::ordered_json twist = nlohmann::ordered_json::object();
  const int d = algebra.d();
  for (int i = 0; i < 8; ++i)
    for (int jj = 0; jj < 8; ++jj) {
      if (!algebra.twist().has(i, jj)) continue;
      nlohmann::ordered_json tensor = nlohmann::ordered_json::array();
      for (int p = 0; p < d; ++p) {
        nlohmann::ordered_json plane = nlohmann::ordered_json::array();
        for (int q = 0; q < d; ++q) {
          nlohmann::ordered_json row = nlohmann::ordered_json::array();
          for (int r = 0; r < d; ++r) row.push_back(rat_str(algebra.twist().entry(i, jj, p, q, r)));
          plane.push_back(std::move(row));
        }
        tensor.push_back(std::move(plane));
      }
      twist[std::to_string(i) + "," + std::to_string(jj)] = std::move(tensor);
    }
  j["twist"] = std::move(twist);
  return j.dump(2);
}

GGAlgebra algebra_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const std::string name = j.at("name").get<std::string>();
  const int d = j.at("d").get<int>();
  if (d <= 0) throw std::invalid_argument("algebra_from_json: d must be positive");
  std::array<bool, 8> mask{};
  for (int i : j.at("mask").get<std::vector<int>>()) {
    if (i < 0 || i > 7) throw std::invalid_argument("algebra_from_json: mask index out of range");
    mask[i] = true;
  }
  TwistTable twist(d);
  for (const auto& [key, tensor] : j.at("twist").items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("algebra_from_json: malformed twist key " + key);
    const int i = std::stoi(key.substr(0, comma));
    const int jj = std::stoi(key.substr(comma + 1));
    if (i < 0 || i > 7 || jj < 0 || jj > 7)
      throw std::invalid_argument("algebra_from_json: twist key out of range " + key);
    if (static_cast<int>(tensor.size()) != d)
      throw std::invalid_argument("algebra_from_json: tensor of wrong shape at " + key);
    for (int p = 0; p < d; ++p) {
      if (static_cast<int>(tensor[p].size()) != d)
        throw std::invalid_argument("algebra_from_json: tensor of wrong shape at " + key);
      for (int q = 0; q < d; ++q) {
        if (static_cast<int>(tensor[p][q].size()) != d)
          throw std::invalid_argument("algebra_from_json: tensor of wrong shape at " + key);
        for (int r = 0; r < d; ++r)
          twist.set_entry(i, jj, p, q, r, parse_rat(tensor[p][q][r].get<std::string>()));
      }
    }
  }
  return GGAlgebra(name, std::move(twist), mask);
}

}  // namespace gga
