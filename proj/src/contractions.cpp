#include "gga/contractions.hpp"

#include "gga/fano.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <thread>

namespace gga::contractions {

using fano::star;

namespace {

constexpr std::array<int, 8> kPairBase = {0, 0, 6, 11, 15, 18, 20, 0};

}  // namespace

int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 7 || i == j) throw std::invalid_argument("pair_index: need 1 <= i < j <= 7");
  return kPairBase[i] + (j - i - 1);
}

std::pair<int, int> pair_of(int index) {
  for (int i = 1; i <= 6; ++i)
    if (index < kPairBase[i] + (7 - i)) return {i, index - kPairBase[i] + i + 1};
  throw std::invalid_argument("pair_of: index out of range");
}

int NiceSet::size() const { return std::popcount(bits); }

std::vector<std::pair<int, int>> NiceSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < 21; ++k)
    if (bits >> k & 1u) out.push_back(pair_of(k));
  return out;
}

void ContractionMap::set(int i, int j, Rat value) {
  if (i < 1 || i > 7 || j < 1 || j > 7 || i == j)
    throw std::invalid_argument("ContractionMap::set: admissible maps vanish on the diagonal "
                                "and against the neutral element");
  eps_[j][i] = value;
  eps_[i][j] = std::move(value);
}

NiceSet support(const ContractionMap& eps) {
  NiceSet t;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      if (eps.eps(i, j) != 0) t = t.with(i, j);
  return t;
}

NiceSet p_set(int i, int j, int k) {
  if (i < 1 || i > 7 || j < 1 || j > 7 || k < 1 || k > 7)
    throw std::invalid_argument("p_set: indices must lie in 1..7");
  if (i == j || j == k || i == k) throw std::invalid_argument("p_set: indices must be distinct");
  if (k == star(i, j)) throw std::invalid_argument("p_set: collinear triple does not generate G");
  NiceSet t;
  t = t.with(i, j).with(j, k).with(k, i);
  t = t.with(i, star(j, k)).with(j, star(k, i)).with(k, star(i, j));
  return t;
}

namespace {

struct NiceRule {
  std::uint32_t condition;
  std::uint32_t closure;
  bool operator<(const NiceRule& o) const {
    return std::pair(condition, closure) < std::pair(o.condition, o.closure);
  }
  bool operator==(const NiceRule&) const = default;
};

const std::vector<NiceRule>& nice_rules() {
  static const std::vector<NiceRule> rules = [] {
    std::vector<NiceRule> out;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) {
          if (i == j || j == k || i == k || k == star(i, j)) continue;
          const std::uint32_t condition =
              (1u << pair_index(i, j)) | (1u << pair_index(star(i, j), k));
          out.push_back({condition, p_set(i, j, k).bits});
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }();
  return rules;
}

}  // namespace

bool is_nice(NiceSet t) {
  for (const NiceRule& rule : nice_rules())
    if ((t.bits & rule.condition) == rule.condition && (t.bits & rule.closure) != rule.closure)
      return false;
  return true;
}

std::vector<NiceSet> enumerate_nice() {
  const std::uint32_t total = 1u << 21;
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
  std::vector<std::vector<NiceSet>> found(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint32_t lo = static_cast<std::uint32_t>(std::uint64_t(total) * w / workers);
      const std::uint32_t hi = static_cast<std::uint32_t>(std::uint64_t(total) * (w + 1) / workers);
      for (std::uint32_t m = lo; m < hi; ++m)
        if (is_nice({m})) found[w].push_back({m});
    });
  }
  for (auto& t : pool) t.join();
  std::vector<NiceSet> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {

// Bit permutations of the 21 pairs induced by the 168 collineations.
const std::vector<std::array<std::uint8_t, 21>>& pair_permutations() {
  static const std::vector<std::array<std::uint8_t, 21>> perms = [] {
    std::vector<std::array<std::uint8_t, 21>> out;
    out.reserve(fano::collineations().size());
    for (const fano::Collineation& mu : fano::collineations()) {
      std::array<std::uint8_t, 21> map{};
      for (int k = 0; k < 21; ++k) {
        auto [i, j] = pair_of(k);
        map[k] = static_cast<std::uint8_t>(pair_index(mu(i), mu(j)));
      }
      out.push_back(map);
    }
    return out;
  }();
  return perms;
}

std::uint32_t apply_bits(std::uint32_t bits, const std::array<std::uint8_t, 21>& map) {
  std::uint32_t out = 0;
  while (bits) {
    const int k = std::countr_zero(bits);
    bits &= bits - 1;
    out |= 1u << map[k];
  }
  return out;
}

}  // namespace

NiceSet apply_collineation(NiceSet t, const fano::Collineation& mu) {
  NiceSet out;
  for (int k = 0; k < 21; ++k)
    if (t.bits >> k & 1u) {
      auto [i, j] = pair_of(k);
      out = out.with(mu(i), mu(j));
    }
  return out;
}

NiceSet canonical_form(NiceSet t) {
  std::uint32_t best = t.bits;
  for (const auto& map : pair_permutations()) best = std::min(best, apply_bits(t.bits, map));
  return {best};
}

std::vector<std::vector<NiceSet>> orbit_classify(const std::vector<NiceSet>& sets) {
  std::vector<std::vector<NiceSet>> orbits;
  std::map<std::uint32_t, std::size_t> index_of;
  for (const NiceSet& t : sets) {
    const std::uint32_t canon = canonical_form(t).bits;
    auto [it, inserted] = index_of.try_emplace(canon, orbits.size());
    if (inserted) orbits.emplace_back();
    orbits[it->second].push_back(t);
  }
  for (auto& orbit : orbits) std::sort(orbit.begin(), orbit.end());
  return orbits;
}

const std::array<NiceSet, 25>& nice_catalog() {
  static const std::array<NiceSet, 25> catalog = [] {
    auto from = [](std::initializer_list<std::pair<int, int>> ps) {
      NiceSet t;
      for (auto [i, j] : ps) t = t.with(i, j);
      return t;
    };
    std::array<NiceSet, 25> c{};
    c[1] = from({});
    c[2] = from({{1, 2}});
    c[3] = from({{1, 2}, {1, 3}});
    c[4] = from({{1, 2}, {1, 4}});
    c[5] = from({{1, 2}, {5, 7}});
    c[6] = from({{1, 2}, {1, 4}, {2, 4}});
    c[7] = from({{2, 4}, {3, 7}, {5, 6}});
    c[8] = from({{1, 2}, {1, 3}, {1, 6}});
    c[9] = from({{1, 2}, {1, 3}, {1, 4}});
    c[10] = from({{1, 2}, {1, 3}, {1, 5}});
    c[11] = from({{1, 2}, {1, 7}, {2, 7}});
    c[12] = from({{1, 2}, {1, 7}, {5, 7}});
    c[13] = from({{1, 2}, {1, 3}, {1, 4}, {1, 6}});
    c[14] = from({{1, 2}, {1, 3}, {1, 4}, {1, 7}});
    c[15] = from({{1, 2}, {1, 5}, {1, 7}, {2, 7}});
    c[16] = from({{1, 2}, {1, 7}, {2, 5}, {5, 7}});
    c[17] = from({{1, 2}, {1, 3}, {1, 4}, {1, 6}, {1, 7}});
    c[18] = from({{1, 2}, {1, 5}, {1, 7}, {2, 5}, {2, 7}});
    c[19] = from({{3, 5}, {3, 6}, {3, 7}, {5, 6}, {5, 7}, {6, 7}});
    c[20] = from({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}});
    c[21] = from({{1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 7}, {3, 4}});
    c[22] = from({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3}, {2, 7}, {3, 4}, {4, 7}});
    c[23] = NiceSet{kFullPairSet.bits & ~c[19].bits};
    c[24] = kFullPairSet;
    return c;
  }();
  return catalog;
}

ContractionMap eps_for(NiceSet t, std::string label) {
  ContractionMap eps(std::move(label));
  for (auto [i, j] : t.pairs()) eps.set(i, j, Rat(1));
  return eps;
}

ContractionMap eps_T(int n) {
  if (n < 1 || n > 24) throw std::invalid_argument("eps_T: n must lie in 1..24");
  return eps_for(nice_catalog()[n], "T" + std::to_string(n));
}

namespace {

void require_nonzero(const Rat& lambda, const char* who) {
  if (lambda == 0) throw std::invalid_argument(std::string(who) + ": parameter must be nonzero");
}

}  // namespace

ContractionMap eta(const Rat& lambda) {
  require_nonzero(lambda, "eta");
  ContractionMap eps("eta:" + rat_str(lambda));
  eps.set(1, 2, Rat(1));
  eps.set(1, 3, Rat(1));
  eps.set(1, 4, Rat(1));
  eps.set(1, 7, lambda);
  return eps;
}

ContractionMap mu(const Rat& lambda) {
  require_nonzero(lambda, "mu");
  ContractionMap eps("mu:" + rat_str(lambda));
  eps.set(1, 2, Rat(1));
  eps.set(1, 4, Rat(1));
  eps.set(1, 6, Rat(1));
  eps.set(1, 3, lambda);
  eps.set(1, 7, lambda);
  return eps;
}

ContractionMap beta(const Rat& lambda1, const Rat& lambda2) {
  require_nonzero(lambda1, "beta");
  require_nonzero(lambda2, "beta");
  ContractionMap eps("beta:" + rat_str(lambda1) + "," + rat_str(lambda2));
  eps.set(1, 2, Rat(1));
  eps.set(1, 4, Rat(1));
  eps.set(1, 3, lambda1);
  eps.set(1, 7, lambda1);
  eps.set(1, 5, lambda2);
  eps.set(1, 6, lambda2);
  return eps;
}

ContractionMap parse_map_spec(const std::string& spec) {
  auto parse_param = [&](const std::string& text) {
    Rat value;
    try {
      value = parse_rat(text);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("malformed map parameter '" + text + "' in " + spec);
    }
    return value;
  };
  if (spec.size() > 1 && spec[0] == 'T' && spec.find(':') == std::string::npos) {
    int n = 0;
    for (std::size_t k = 1; k < spec.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(spec[k])))
        throw std::invalid_argument("malformed map spec: " + spec);
      n = n * 10 + (spec[k] - '0');
    }
    if (n < 1 || n > 24) throw std::invalid_argument("map spec out of range (T1..T24): " + spec);
    return eps_T(n);
  }
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("malformed map spec: " + spec);
  const std::string family = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  if (family == "eta") return eta(parse_param(args));
  if (family == "mu") return mu(parse_param(args));
  if (family == "beta") {
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("beta expects two parameters: " + spec);
    return beta(parse_param(args.substr(0, comma)), parse_param(args.substr(comma + 1)));
  }
  throw std::invalid_argument("unknown map family in spec: " + spec);
}

ContractionCheckReport verify_contraction(const ContractionMap& eps) {
  ContractionCheckReport report;
  for (int g = 1; g <= 7; ++g)
    for (int h = g + 1; h <= 7; ++h)
      if (eps.eps(g, h) != eps.eps(h, g)) report.symmetry_violations.push_back({g, h});
  // (a2)' over ordered triples with <g,h,k> = G, i.e. distinct with k != g*h.
  for (int g = 1; g <= 7; ++g)
    for (int h = 1; h <= 7; ++h)
      for (int k = 1; k <= 7; ++k) {
        if (g == h || h == k || g == k || k == star(g, h)) continue;
        const Rat lhs = eps.eps(g, star(h, k)) * eps.eps(h, k);
        const Rat rhs = eps.eps(k, star(g, h)) * eps.eps(g, h);
        if (lhs != rhs) report.ternary_violations.push_back({g, h, k});
      }
  return report;
}

GGAlgebra contract(const GGAlgebra& algebra, const ContractionMap& eps) {
  if (!verify_contraction(eps).ok())
    throw std::domain_error("contract: map fails the graded-contraction conditions");
  const int d = algebra.d();
  TwistTable twist(d);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      if (!algebra.twist().has(i, j)) continue;
      const Rat scale = (i >= 1 && j >= 1 && i != j) ? eps.eps(i, j) : Rat(0);
      if (scale == 0) continue;
      for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
          for (int r = 0; r < d; ++r) {
            const Rat& c = algebra.twist().entry(i, j, p, q, r);
            if (c != 0) twist.set_entry(i, j, p, q, r, scale * c);
          }
    }
  twist.normalize();
  const std::string label = eps.label().empty() ? "eps" : eps.label();
  return GGAlgebra(algebra.name() + "^" + label, std::move(twist), algebra.mask());
}

std::vector<SurveyRow> contraction_survey(const GGAlgebra& algebra,
                                          const std::vector<ContractionMap>& maps) {
  std::vector<SurveyRow> rows;
  rows.reserve(maps.size());
  for (const ContractionMap& eps : maps) {
    const GGAlgebra contracted = contract(algebra, eps);
    SurveyRow row;
    row.algebra = algebra.name();
    row.map = eps.label();
    const BasisLie lie = structure_constants(contracted);
    row.lie_ok = verify_lie(lie).ok();
    row.fp = fingerprint(lie);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ContractionMap> standard_survey_maps() {
  std::vector<ContractionMap> maps;
  for (int n = 1; n <= 24; ++n) maps.push_back(eps_T(n));
  maps.push_back(eta(Rat(2)));
  maps.push_back(mu(Rat(2)));
  maps.push_back(beta(Rat(2), Rat(3)));
  return maps;
}

}  // namespace gga::contractions
