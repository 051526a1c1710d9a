#pragma once

#include "gga/rational.hpp"

#include <optional>
#include <vector>

namespace gga {

/// Dense matrix of exact rationals, row-major. Sized for the algebras at
/// hand (n <= 32 plus stacked linear systems), not for large-scale work.
class QMat {
 public:
  QMat() = default;
  QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static QMat identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  QVec row(int r) const {
    return QVec(a_.begin() + static_cast<std::size_t>(r) * cols_,
                a_.begin() + static_cast<std::size_t>(r + 1) * cols_);
  }
  void set_row(int r, const QVec& v) {
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
  }

  bool operator==(const QMat& o) const = default;

  QMat operator*(const QMat& o) const;
  QMat operator+(const QMat& o) const;
  QMat operator-(const QMat& o) const;
  QVec operator*(const QVec& v) const;
  QMat transposed() const;
  bool is_zero() const;

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<int> rref();

  int rank() const;

  /// Basis of { x : M x = 0 }, one row per basis vector, in RREF.
  QMat kernel() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> a_;
};

/// Solves B x = v where the columns of B are the given basis vectors
/// (required linearly independent). Returns nullopt if v is outside the span.
std::optional<QVec> solve_in_span(const std::vector<QVec>& basis, const QVec& v);

/// A linear subspace of Q^ambient stored as RREF rows, so equality of
/// subspaces is literal matrix equality.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(int ambient, const std::vector<QVec>& generators);
  static Subspace whole(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const QMat& basis() const { return basis_; }
  QVec basis_vector(int k) const { return basis_.row(k); }

  bool contains(const QVec& v) const;
  bool operator==(const Subspace& o) const = default;

 private:
  int ambient_ = 0;
  QMat basis_;
};

}  // namespace gga
