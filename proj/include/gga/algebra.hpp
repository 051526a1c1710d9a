#pragma once

#include "gga/fano.hpp"
#include "gga/linalg.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace gga {

/// A formal sum sum_i r_i g_i with one coefficient vector per group element.
struct AlgebraElement {
  int d = 0;
  std::array<QVec, 8> comp;  // comp[i] has size d

  static AlgebraElement zero(int d);
  /// coeff * g_i
  static AlgebraElement monomial(int i, QVec coeff);

  bool is_zero() const;
  bool component_zero(int i) const { return gga::is_zero(comp[i]); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const Rat& scalar);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rat& s, AlgebraElement a) { return a *= s; }
  bool operator==(const AlgebraElement&) const = default;
};

/// The twist sigma: G x G -> Bil(V x V, V) as rational rank-3 tensors per
/// ordered pair. t[i][j] flattened [p][q][r]; an absent tensor is the zero map.
class TwistTable {
 public:
  TwistTable() = default;
  explicit TwistTable(int d) : d_(d) {}

  int dim() const { return d_; }
  bool has(int i, int j) const { return !t_[i][j].empty(); }
  int nonzero_pairs() const;

  void set_entry(int i, int j, int p, int q, int r, Rat value);
  const Rat& entry(int i, int j, int p, int q, int r) const;

  /// sigma_{g_i, g_j}(r, s); zero tensor gives the zero vector.
  QVec apply(int i, int j, const QVec& r, const QVec& s) const;

  /// Drops tensors that became all-zero, so has() means "nonzero map".
  void normalize();

  bool operator==(const TwistTable&) const = default;

 private:
  int d_ = 0;
  std::array<std::array<QVec, 8>, 8> t_;  // flattened d^3, empty == zero
};

/// A generalized group algebra: coefficient dimension, twist, and the set of
/// active group components. Mask-closure is validated at construction.
class GGAlgebra {
 public:
  GGAlgebra(std::string name, TwistTable twist, const std::array<bool, 8>& mask);

  const std::string& name() const { return name_; }
  int d() const { return twist_.dim(); }
  const TwistTable& twist() const { return twist_; }
  const std::array<bool, 8>& mask() const { return mask_; }
  const std::vector<int>& active() const { return active_; }
  int dim() const { return d() * static_cast<int>(active_.size()); }

  /// Flat coordinates run over basis elements e_p g_i, lexicographic in (i, p).
  int flat_index(int i, int p) const;
  std::pair<int, int> basis_label(int alpha) const;
  std::string basis_label_str(int alpha) const;
  QVec flatten(const AlgebraElement& x) const;
  AlgebraElement unflatten(const QVec& v) const;
  AlgebraElement basis_element(int alpha) const;

  /// The twisted bracket, the bilinear extension of
  /// [r g_i, s g_j] = sigma_{i,j}(r, s) g_{i*j}.
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;

 private:
  std::string name_;
  TwistTable twist_;
  std::array<bool, 8> mask_{};
  std::vector<int> active_;
  std::array<int, 8> flat_base_{};  // -1 for inactive components
};

/// Structure constants over an explicit basis: table[a*n+b] = coords of
/// [b_a, b_b]. The analysis routines (center, series, Killing, fingerprint)
/// run on this form so they apply to subalgebras as well.
struct BasisLie {
  int n = 0;
  std::vector<QVec> table;

  const QVec& bk(int a, int b) const { return table[static_cast<std::size_t>(a) * n + b]; }
};

BasisLie structure_constants(const GGAlgebra& algebra);
/// Structure constants of a bracket-closed subspace in its own RREF basis.
/// Throws std::domain_error if the subspace is not closed under the bracket.
BasisLie structure_constants(const GGAlgebra& algebra, const Subspace& subalgebra);
bool bracket_closed(const GGAlgebra& algebra, const Subspace& subspace);

struct LieCheckReport {
  std::vector<std::array<int, 2>> skew_violations;    // flat basis pairs
  std::vector<std::array<int, 3>> jacobi_violations;  // flat basis triples
  bool ok() const { return skew_violations.empty() && jacobi_violations.empty(); }
};

/// Checks [b_a,b_b] + [b_b,b_a] = 0 and the Jacobi cyclic sum over all basis
/// pairs/triples. Violations are report content, not errors.
LieCheckReport verify_lie(const GGAlgebra& algebra);
LieCheckReport verify_lie(const BasisLie& lie);

enum class SeriesKind { derived, lower_central };

Subspace center(const GGAlgebra& algebra);
Subspace center(const BasisLie& lie);

/// L ⊇ [L,L] ⊇ ... (derived) or L ⊇ [L,L] ⊇ [L,[L,L]] ⊇ ... (lower central),
/// until the dimension stabilizes or reaches zero.
std::vector<Subspace> series(const GGAlgebra& algebra, SeriesKind kind);
std::vector<Subspace> series(const BasisLie& lie, SeriesKind kind);

/// Gram matrix of kappa(x,y) = tr(ad x . ad y) over the flat basis.
QMat killing(const GGAlgebra& algebra);
QMat killing(const BasisLie& lie);

Subspace killing_radical(const GGAlgebra& algebra);
Subspace killing_radical(const BasisLie& lie);

/// Rebases the coefficient space to a twist-closed subspace. Throws
/// std::domain_error when some sigma_{i,j}(b_p, b_q) leaves the span.
GGAlgebra restrict_coefficients(const GGAlgebra& algebra, const std::vector<QVec>& basis,
                                std::string name = "");

/// Necessary isomorphism invariants used to compare contracted algebras.
struct Fingerprint {
  int dim = 0;
  int center_dim = 0;
  std::vector<int> derived_dims;
  std::vector<int> lower_central_dims;
  int killing_rank = 0;
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  int nilpotency_class = -1;  // -1 when not nilpotent
  int solvable_length = -1;   // -1 when not solvable

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const GGAlgebra& algebra);
Fingerprint fingerprint(const BasisLie& lie);
Fingerprint subalgebra_fingerprint(const GGAlgebra& algebra, const Subspace& subalgebra);

/// JSON persistence: {"name", "d", "mask", "twist": {"i,j": d*d*d nested
/// arrays of "p/q" strings}}. Absent pairs are the zero map.
std::string algebra_to_json(const GGAlgebra& algebra);
GGAlgebra algebra_from_json(const std::string& text);

}  // namespace gga
