#include "gga/linalg.hpp"

#include <stdexcept>

namespace gga {

QMat QMat::operator*(const QMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMat::operator*: shape mismatch");
  QMat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& y = o.at(k, j);
        if (y != 0) r.at(i, j) += x * y;
      }
    }
  return r;
}

QMat QMat::operator+(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMat::operator+: shape mismatch");
  QMat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

QMat QMat::operator-(const QMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMat::operator-: shape mismatch");
  QMat r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

QVec QMat::operator*(const QVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("QMat::operator*(vec): shape mismatch");
  QVec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Rat& x = at(i, j);
      if (x != 0 && v[j] != 0) r[i] += x * v[j];
    }
  return r;
}

QMat QMat::transposed() const {
  QMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool QMat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<int> QMat::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
    const Rat inv = Rat(1) / at(r, c);
    for (int j = c; j < cols_; ++j) at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const Rat f = at(i, c);
      for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int QMat::rank() const {
  QMat copy = *this;
  return static_cast<int>(copy.rref().size());
}

QMat QMat::kernel() const {
  QMat copy = *this;
  const std::vector<int> pivots = copy.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;

  QMat basis(cols_ - static_cast<int>(pivots.size()), cols_);
  int out = 0;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    basis.at(out, free) = 1;
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      basis.at(out, pivots[pr]) = -copy.at(static_cast<int>(pr), free);
    ++out;
  }
  // The free-column construction already yields RREF rows up to ordering;
  // reduce once more so Subspace equality stays literal.
  basis.rref();
  return basis;
}

std::optional<QVec> solve_in_span(const std::vector<QVec>& basis, const QVec& v) {
  if (basis.empty()) {
    if (is_zero(v)) return QVec{};
    return std::nullopt;
  }
  const int n = static_cast<int>(basis[0].size());
  const int k = static_cast<int>(basis.size());
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("solve_in_span: vector length mismatch");
  QMat aug(n, k + 1);
  for (int c = 0; c < k; ++c) {
    if (static_cast<int>(basis[c].size()) != n)
      throw std::invalid_argument("solve_in_span: ragged basis");
    for (int r = 0; r < n; ++r) aug.at(r, c) = basis[c][r];
  }
  for (int r = 0; r < n; ++r) aug.at(r, k) = v[r];
  const std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
  if (static_cast<int>(pivots.size()) != k)
    throw std::invalid_argument("solve_in_span: basis is linearly dependent");
  QVec x(k);
  for (int pr = 0; pr < k; ++pr) x[pivots[pr]] = aug.at(pr, k);
  return x;
}

Subspace Subspace::span(int ambient, const std::vector<QVec>& generators) {
  QMat m(static_cast<int>(generators.size()), ambient);
  for (std::size_t r = 0; r < generators.size(); ++r) {
    if (static_cast<int>(generators[r].size()) != ambient)
      throw std::invalid_argument("Subspace::span: generator of wrong length");
    m.set_row(static_cast<int>(r), generators[r]);
  }
  const int rank = static_cast<int>(m.rref().size());
  Subspace s(ambient);
  s.basis_ = QMat(rank, ambient);
  for (int r = 0; r < rank; ++r) s.basis_.set_row(r, m.row(r));
  return s;
}

Subspace Subspace::whole(int ambient) {
  Subspace s(ambient);
  s.basis_ = QMat::identity(ambient);
  return s;
}

bool Subspace::contains(const QVec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("Subspace::contains: wrong length");
  // One sweep of elimination against the RREF basis.
  QVec w = v;
  for (int r = 0; r < basis_.rows(); ++r) {
    int lead = -1;
    for (int c = 0; c < ambient_; ++c)
      if (basis_.at(r, c) != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    if (w[lead] != 0) {
      const Rat f = w[lead];
      for (int c = lead; c < ambient_; ++c) w[c] -= f * basis_.at(r, c);
    }
  }
  return is_zero(w);
}

}  // namespace gga
