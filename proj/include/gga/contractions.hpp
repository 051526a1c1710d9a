#pragma once

#include "gga/algebra.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gga::contractions {

/// The 21-element pair set X = {{i,j} : 1 <= i < j <= 7}, indexed
/// lexicographically: {1,2} -> 0, ..., {6,7} -> 20.
int pair_index(int i, int j);
std::pair<int, int> pair_of(int index);

/// A subset of X as a 21-bit mask.
struct NiceSet {
  std::uint32_t bits = 0;

  bool contains(int i, int j) const { return bits >> pair_index(i, j) & 1u; }
  NiceSet with(int i, int j) const { return {bits | (1u << pair_index(i, j))}; }
  int size() const;
  std::vector<std::pair<int, int>> pairs() const;

  auto operator<=>(const NiceSet&) const = default;
};

inline const NiceSet kFullPairSet{(1u << 21) - 1};

/// An admissible scalar map eps: G x G -> Q. Admissibility (zero diagonal,
/// zero against the neutral element) and symmetry are construction invariants.
class ContractionMap {
 public:
  ContractionMap() = default;
  explicit ContractionMap(std::string label) : label_(std::move(label)) {}

  /// Sets eps(g_i, g_j) = eps(g_j, g_i) = value; i, j must be distinct and
  /// nonzero.
  void set(int i, int j, Rat value);
  const Rat& eps(int i, int j) const { return eps_[i][j]; }

  const std::string& label() const { return label_; }
  bool operator==(const ContractionMap&) const = default;

 private:
  std::array<std::array<Rat, 8>, 8> eps_{};
  std::string label_;
};

/// supp eps = { {i,j} : eps(g_i, g_j) != 0 }.
NiceSet support(const ContractionMap& eps);

/// P_{{i,j,k}} = {{i,j},{j,k},{k,i},{i,j*k},{j,k*i},{k,i*j}} for a generating
/// triple; throws std::invalid_argument on repeated or collinear indices.
NiceSet p_set(int i, int j, int k);

/// Closure condition of the nice sets: {i,j}, {i*j,k} in T forces
/// P_{{i,j,k}} subset of T, over all generating triples.
bool is_nice(NiceSet t);

/// All nice subsets of X by exhaustive scan of the 2^21 masks, ascending.
std::vector<NiceSet> enumerate_nice();

/// Lexicographically minimal image under the 168 collineations acting on pairs.
NiceSet canonical_form(NiceSet t);

/// Partition into collineation orbits, ordered by first appearance; members
/// sorted ascending.
std::vector<std::vector<NiceSet>> orbit_classify(const std::vector<NiceSet>& sets);

NiceSet apply_collineation(NiceSet t, const fano::Collineation& mu);

/// The 24 orbit representatives T_1..T_24 (index 0 unused).
const std::array<NiceSet, 25>& nice_catalog();

/// eps^T: 1 on the pairs of T, 0 elsewhere.
ContractionMap eps_for(NiceSet t, std::string label = "");
ContractionMap eps_T(int n);  // n in 1..24

/// The parametric families supported on T_14, T_17 and T_20; parameters must
/// be nonzero.
ContractionMap eta(const Rat& lambda);
ContractionMap mu(const Rat& lambda);
ContractionMap beta(const Rat& lambda1, const Rat& lambda2);

/// Parses "T<n>" | "eta:<q>" | "mu:<q>" | "beta:<q>,<q>" with nonzero
/// rationals <q> as "p/q" or integers.
ContractionMap parse_map_spec(const std::string& spec);

struct ContractionCheckReport {
  std::vector<std::array<int, 2>> symmetry_violations;     // (a1)'
  std::vector<std::array<int, 3>> ternary_violations;      // (a2)' triples (g,h,k)
  bool ok() const { return symmetry_violations.empty() && ternary_violations.empty(); }
};

/// (a1)' eps(g,h) = eps(h,g) for all pairs and (a2)' eps(g,h,k) = eps(k,g,h)
/// for all ordered triples generating G, with eps(g,h,k) = eps(g,h+k) eps(h,k).
ContractionCheckReport verify_contraction(const ContractionMap& eps);

/// The contracted algebra with twist sigma~_{g,h} = eps(g,h) sigma_{g,h}.
/// Throws std::domain_error when eps fails verify_contraction.
GGAlgebra contract(const GGAlgebra& algebra, const ContractionMap& eps);

struct SurveyRow {
  std::string algebra;
  std::string map;
  bool lie_ok = false;
  Fingerprint fp;
};

std::vector<SurveyRow> contraction_survey(const GGAlgebra& algebra,
                                          const std::vector<ContractionMap>& maps);

/// The standard survey maps: eps^{T_1..T_24}, eta(2), mu(2), beta(2,3).
std::vector<ContractionMap> standard_survey_maps();

}  // namespace gga::contractions
