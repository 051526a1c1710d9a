// Acceptance suite: runs every criterion at its stated tolerance (exact
// arithmetic everywhere except the floating gl_n side check) and prints one
// pass/fail line per criterion. Exit code 0 iff all criteria pass.

#include "gga/algebra.hpp"
#include "gga/catalog.hpp"
#include "gga/contractions.hpp"
#include "gga/fano.hpp"
#include "gga/ortho.hpp"
#include "gga/reps.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <vector>

using namespace gga;
using catalog::Mask;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> failures;
  bool passed = true;

  Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

std::vector<std::pair<std::string, Mask>> algebra_grid() {
  std::vector<std::pair<std::string, Mask>> grid;
  for (const char* name : {"d4", "b3", "g2"})
    for (Mask mask : {Mask::full, Mask::gx}) grid.emplace_back(name, mask);
  return grid;
}

QMat killing_block(const std::string& name) {
  if (name == "d4") {
    QMat m(4, 4);
    for (int k = 0; k < 4; ++k) m.at(k, k) = -12;
    return m;
  }
  if (name == "b3") {
    QMat m(3, 3);
    for (int k = 0; k < 3; ++k) m.at(k, k) = -10;
    return m;
  }
  QMat m(2, 2);
  m.at(0, 0) = -16;
  m.at(1, 1) = -48;
  return m;
}

const std::vector<Rat>& sweep() {
  static const std::vector<Rat> values = {Rat(2), Rat(1, 2), Rat(3), Rat(-1), Rat(5)};
  return values;
}

std::vector<contractions::ContractionMap> sweep_maps() {
  std::vector<contractions::ContractionMap> maps;
  for (int n = 1; n <= 24; ++n) maps.push_back(contractions::eps_T(n));
  for (const Rat& l : sweep()) {
    maps.push_back(contractions::eta(l));
    maps.push_back(contractions::mu(l));
  }
  for (const Rat& l1 : sweep())
    for (const Rat& l2 : sweep()) maps.push_back(contractions::beta(l1, l2));
  return maps;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Criterion> results;

  {
    Criterion c{1, "Lie axioms for d4/b3/g2 on both masks (exhaustive, exact)"};
    for (const auto& [name, mask] : algebra_grid()) {
      const auto report = verify_lie(catalog::make(name, mask));
      c.require(report.ok(), name + std::string(" verify_lie"));
    }
    results.push_back(std::move(c));
  }

  {
    Criterion c{2, "oracle equivalence of sigma_d4/sigma_b3 with the phi-matrix commutators"};
    const auto d4 = ortho::oracle_compare(catalog::make("d4", Mask::full));
    c.require(d4.ok() && d4.pairs_checked == 784, "d4 oracle (784 pairs)");
    const auto b3 = ortho::oracle_compare(catalog::make("b3", Mask::full));
    c.require(b3.ok() && b3.pairs_checked == 441, "b3 oracle (441 pairs)");
    results.push_back(std::move(c));
  }

  {
    Criterion c{3, "Killing Gram blocks -12*I4 / -10*I3 / [[-16,0],[0,-48]], radical = neutral"};
    for (const auto& [name, mask] : algebra_grid()) {
      const GGAlgebra a = catalog::make(name, mask);
      const QMat gram = killing(a);
      const QMat block = killing_block(name);
      bool blocks_ok = true;
      for (int x = 0; x < a.dim(); ++x)
        for (int y = 0; y < a.dim(); ++y) {
          auto [i, p] = a.basis_label(x);
          auto [j, q] = a.basis_label(y);
          const Rat want = (i == j && i != 0) ? block.at(p, q) : Rat(0);
          if (gram.at(x, y) != want) blocks_ok = false;
        }
      c.require(blocks_ok, a.name() + " Gram blocks");

      const Subspace radical = killing_radical(a);
      if (mask == Mask::full) {
        std::vector<QVec> neutral;
        for (int p = 0; p < a.d(); ++p) {
          QVec v(a.dim(), Rat(0));
          v[a.flat_index(0, p)] = 1;
          neutral.push_back(v);
        }
        c.require(radical == Subspace::span(a.dim(), neutral), a.name() + " radical = V g0");
      } else {
        c.require(radical.dim() == 0, a.name() + " Killing nondegenerate");
      }
    }
    results.push_back(std::move(c));
  }

  {
    Criterion c{4, "center dims 4/3/2, derived dims 28/21/14, G^x algebras perfect"};
    const int want_center[] = {4, 3, 2};
    const int want_derived[] = {28, 21, 14};
    int idx = 0;
    for (const char* name : {"d4", "b3", "g2"}) {
      const GGAlgebra full = catalog::make(name, Mask::full);
      c.require(center(full).dim() == want_center[idx], full.name() + " center dim");
      c.require(series(full, SeriesKind::derived)[1].dim() == want_derived[idx],
                full.name() + " derived dim");

      const GGAlgebra gx = catalog::make(name, Mask::gx);
      c.require(center(gx).dim() == 0, gx.name() + " centerless");
      const auto chain = series(gx, SeriesKind::derived);
      c.require(chain.size() == 2 && chain[0].dim() == want_derived[idx] &&
                    chain[1].dim() == want_derived[idx],
                gx.name() + " perfect (derived series stabilizes immediately)");
      ++idx;
    }
    results.push_back(std::move(c));
  }

  {
    Criterion c{5, "rho1/rho2/rho3/rho_b3/rho_g2: homomorphisms, irreducible, intertwiners 0/1"};
    const GGAlgebra d4 = catalog::make("d4", Mask::gx);
    std::vector<reps::Representation> eights;
    for (int k = 1; k <= 3; ++k) eights.push_back(reps::rho(k, d4));
    std::vector<reps::Representation> all = eights;
    all.push_back(reps::rho7(reps::Rho7::b3, catalog::make("b3", Mask::gx)));
    all.push_back(reps::rho7(reps::Rho7::g2, catalog::make("g2", Mask::gx)));
    for (const auto& rep : all) {
      c.require(reps::verify_homomorphism(rep).ok(), rep.name + " homomorphism");
      c.require(reps::verify_irreducible(rep), rep.name + " irreducible");
    }
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        const int dim = reps::intertwiner_dim(eights[a], eights[b]);
        c.require(dim == (a == b ? 1 : 0),
                  "intertwiner(rho" + std::to_string(a + 1) + ",rho" + std::to_string(b + 1) +
                      ") = " + std::to_string(dim));
      }
    results.push_back(std::move(c));
  }

  {
    Criterion c{6, "triality: bracket automorphism, theta^3 = id, Fix dim 14 with g2 fingerprint"};
    const GGAlgebra d4 = catalog::make("d4", Mask::gx);
    const auto theta = reps::triality(d4);
    c.require(reps::is_bracket_automorphism(theta), "theta is a bracket automorphism");
    c.require(theta.matrix * theta.matrix * theta.matrix == QMat::identity(d4.dim()),
              "theta^3 = id");
    const Subspace fix = reps::fixed_subalgebra(theta);
    c.require(fix.dim() == 14, "dim Fix(theta) = 14");
    c.require(subalgebra_fingerprint(d4, fix) == fingerprint(catalog::make("g2", Mask::gx)),
              "Fix(theta) fingerprint = g2 fingerprint");
    results.push_back(std::move(c));
  }

  {
    Criterion c{7, "nice sets: 2^21 scan, 24 collineation orbits, catalog complete, T21 = P_{1,2,3}"};
    const auto sets = contractions::enumerate_nice();
    const auto orbits = contractions::orbit_classify(sets);
    c.require(orbits.size() == 24, "orbit count " + std::to_string(orbits.size()));

    std::set<std::uint32_t> canon;
    for (int n = 1; n <= 24; ++n)
      canon.insert(contractions::canonical_form(contractions::nice_catalog()[n]).bits);
    c.require(canon.size() == 24, "T1..T24 pairwise non-collinear");

    int matched = 0;
    for (const auto& orbit : orbits)
      for (int n = 1; n <= 24; ++n)
        if (std::find(orbit.begin(), orbit.end(), contractions::nice_catalog()[n]) != orbit.end())
          ++matched;
    c.require(matched == 24, "catalog hits every orbit exactly once");
    c.require(contractions::p_set(1, 2, 3) == contractions::nice_catalog()[21],
              "T21 = P_{1,2,3}");
    results.push_back(std::move(c));
  }

  const auto maps = sweep_maps();

  {
    Criterion c{8, "contraction validity over the parameter sweep, contracted algebras all Lie"};
    for (const auto& eps : maps)
      c.require(contractions::verify_contraction(eps).ok(), eps.label() + " (a1)'/(a2)'");
    for (const auto& [name, mask] : algebra_grid()) {
      const GGAlgebra base = catalog::make(name, mask);
      for (const auto& eps : maps) {
        const GGAlgebra contracted = contractions::contract(base, eps);
        c.require(verify_lie(contracted).ok(), contracted.name() + " verify_lie");
      }
    }
    results.push_back(std::move(c));
  }

  {
    Criterion c{9, "contraction anchors: T24 identity, T1 abelian, T8~T10, dim/nilpotency survey"};
    for (const auto& [name, mask] : algebra_grid()) {
      const GGAlgebra base = catalog::make(name, mask);
      c.require(contractions::contract(base, contractions::eps_T(24)).twist() == base.twist(),
                base.name() + " T24 identity");
      c.require(fingerprint(contractions::contract(base, contractions::eps_T(1))).abelian,
                base.name() + " T1 abelian");
      c.require(fingerprint(contractions::contract(base, contractions::eps_T(8))) ==
                    fingerprint(contractions::contract(base, contractions::eps_T(10))),
                base.name() + " T8/T10 fingerprints agree");
    }

    std::set<int> dims;
    bool saw_nilpotent = false, saw_solvable_not_nilpotent = false;
    for (const auto& [name, mask] : algebra_grid()) {
      const GGAlgebra base = catalog::make(name, mask);
      const auto rows = contractions::contraction_survey(base, contractions::standard_survey_maps());
      for (const auto& row : rows) {
        c.require(row.lie_ok, row.algebra + "^" + row.map + " Lie");
        dims.insert(row.fp.dim);
        if (row.fp.nilpotent && !row.fp.abelian) saw_nilpotent = true;
        if (row.fp.solvable && !row.fp.nilpotent) saw_solvable_not_nilpotent = true;
      }
    }
    c.require(dims == std::set<int>{14, 16, 21, 24, 28, 32},
              "survey dimensions are exactly {32,28,24,21,16,14}");
    c.require(saw_nilpotent, "survey exhibits a non-abelian nilpotent algebra");
    c.require(saw_solvable_not_nilpotent, "survey exhibits a solvable non-nilpotent algebra");

    const Fingerprint witness =
        fingerprint(contractions::contract(catalog::make("g2", Mask::gx), contractions::eps_T(2)));
    c.require(witness.dim == 14 && witness.nilpotent, "contract(g2 on G^x, T2) nilpotent of dim 14");
    results.push_back(std::move(c));
  }

  {
    Criterion c{10, "gl_n side example: max deviation < 1e-9 for n = 2, 3 (floating)"};
    for (int n : {2, 3}) {
      const auto report = catalog::gln_check(n);
      c.require(report.max_deviation < 1e-9,
                "n = " + std::to_string(n) + " deviation " + std::to_string(report.max_deviation));
    }
    results.push_back(std::move(c));
  }

  bool all_passed = true;
  for (const Criterion& c : results) {
    std::cout << "criterion " << (c.number < 10 ? " " : "") << c.number << " ["
              << (c.passed ? "PASS" : "FAIL") << "] " << c.title << "\n";
    for (const std::string& f : c.failures) std::cout << "            failed: " << f << "\n";
    all_passed &= c.passed;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::cout << (all_passed ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES above")
            << " (" << ms << " ms)\n";
  return all_passed ? 0 : 1;
}
