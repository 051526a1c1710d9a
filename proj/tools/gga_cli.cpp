// Command-line front end: build catalog algebras, run verification suites,
// enumerate/classify nice sets, run contraction surveys, emit JSON reports.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage error.

#include "gga/algebra.hpp"
#include "gga/catalog.hpp"
#include "gga/contractions.hpp"
#include "gga/fano.hpp"
#include "gga/ortho.hpp"
#include "gga/reps.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::ordered_json;

struct Report {
  std::string command;
  std::vector<ordered_json> checks;
  ordered_json stats = ordered_json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ordered_json c;
    c["name"] = name;
    c["ok"] = ok;
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(std::move(c));
  }

  bool pass() const {
    for (const auto& c : checks)
      if (!c.at("ok").get<bool>()) return false;
    return true;
  }

  int emit(const std::string& out_path) const {
    ordered_json j;
    j["command"] = command;
    j["status"] = pass() ? "pass" : "fail";
    j["checks"] = checks;
    if (!stats.empty()) j["stats"] = stats;
    j["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    const std::string text = j.dump(2);
    if (out_path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream file(out_path);
      file << text << "\n";
      if (!file) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
      }
    }
    return pass() ? 0 : 1;
  }
};

gga::catalog::Mask parse_mask(const std::string& mask) {
  return mask == "gx" ? gga::catalog::Mask::gx : gga::catalog::Mask::full;
}

ordered_json fingerprint_json(const gga::Fingerprint& fp) {
  ordered_json j;
  j["dim"] = fp.dim;
  j["center_dim"] = fp.center_dim;
  j["derived_dims"] = fp.derived_dims;
  j["lower_central_dims"] = fp.lower_central_dims;
  j["killing_rank"] = fp.killing_rank;
  j["abelian"] = fp.abelian;
  j["nilpotent"] = fp.nilpotent;
  j["solvable"] = fp.solvable;
  if (fp.nilpotent) j["nilpotency_class"] = fp.nilpotency_class;
  if (fp.solvable) j["solvable_length"] = fp.solvable_length;
  return j;
}

// Expected Killing block per degree: c * Gram of the coefficient basis.
gga::QMat expected_killing_block(const std::string& algebra) {
  using gga::Rat;
  if (algebra == "d4") {
    gga::QMat m(4, 4);
    for (int k = 0; k < 4; ++k) m.at(k, k) = -12;
    return m;
  }
  if (algebra == "b3") {
    gga::QMat m(3, 3);
    for (int k = 0; k < 3; ++k) m.at(k, k) = -10;
    return m;
  }
  gga::QMat m(2, 2);
  m.at(0, 0) = -16;
  m.at(1, 1) = -48;
  return m;
}

int expected_center_dim(const std::string& algebra) {
  if (algebra == "d4") return 4;
  if (algebra == "b3") return 3;
  return 2;
}

void run_verify(Report& report, const std::string& algebra_name, const std::string& mask_name) {
  using namespace gga;
  const bool full = mask_name != "gx";
  const GGAlgebra algebra = catalog::make(algebra_name, parse_mask(mask_name));
  const BasisLie lie = structure_constants(algebra);

  const auto lie_report = verify_lie(lie);
  report.check("lie_axioms", lie_report.ok(),
               lie_report.ok() ? "skew + Jacobi exhaustive"
                               : std::to_string(lie_report.skew_violations.size() +
                                                lie_report.jacobi_violations.size()) +
                                     " violations");

  const int want_center = full ? expected_center_dim(algebra_name) : 0;
  const Subspace z = center(lie);
  report.check("center_dim", z.dim() == want_center,
               "dim " + std::to_string(z.dim()) + ", expected " + std::to_string(want_center));

  const int derived_dim = series(lie, SeriesKind::derived)[1].dim();
  const int want_derived = algebra_name == "d4" ? 28 : (algebra_name == "b3" ? 21 : 14);
  report.check("derived_dim", derived_dim == want_derived,
               "dim " + std::to_string(derived_dim) + ", expected " + std::to_string(want_derived));

  // Killing Gram: expected block per degree, zero off-degree, radical equal
  // to the neutral component (full mask) or zero (G^x).
  const QMat gram = killing(lie);
  const QMat block = expected_killing_block(algebra_name);
  const int d = algebra.d();
  bool blocks_ok = true;
  for (int a = 0; a < algebra.dim() && blocks_ok; ++a)
    for (int b = 0; b < algebra.dim() && blocks_ok; ++b) {
      auto [i, p] = algebra.basis_label(a);
      auto [j, q] = algebra.basis_label(b);
      gga::Rat want(0);
      if (i == j && i != 0) want = block.at(p, q);
      if (gram.at(a, b) != want) blocks_ok = false;
    }
  report.check("killing_blocks", blocks_ok,
               algebra_name == "g2" ? "diag blocks [[-16,0],[0,-48]]"
                                    : "diag blocks " + std::string(algebra_name == "d4" ? "-12" : "-10") +
                                          "*I" + std::to_string(d));

  const Subspace radical = killing_radical(lie);
  bool radical_ok;
  std::string radical_detail;
  if (full) {
    std::vector<QVec> neutral;
    for (int p = 0; p < d; ++p) {
      QVec v(algebra.dim(), Rat(0));
      v[algebra.flat_index(0, p)] = 1;
      neutral.push_back(v);
    }
    radical_ok = radical == Subspace::span(algebra.dim(), neutral);
    radical_detail = "radical = neutral component (dim " + std::to_string(radical.dim()) + ")";
  } else {
    radical_ok = radical.dim() == 0;
    radical_detail = "Killing nondegenerate";
  }
  report.check("killing_radical", radical_ok, radical_detail);

  if (algebra_name != "g2") {
    const auto oracle = ortho::oracle_compare(algebra);
    report.check("oracle_match", oracle.ok(),
                 std::to_string(oracle.pairs_checked) + " pairs checked, " +
                     std::to_string(oracle.mismatches.size()) + " mismatches");
  }

  report.stats["dim"] = algebra.dim();
  report.stats["twist_nonzero_pairs"] = algebra.twist().nonzero_pairs();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized group algebras over Z_2^3: catalog, verification, contractions"};
  app.require_subcommand(1);

  const std::vector<std::string> algebra_names = {"d4", "b3", "g2"};
  const std::vector<std::string> mask_names = {"full", "gx"};
  const std::vector<std::string> rep_names = {"rho1", "rho2", "rho3", "b3", "g2"};

  std::string algebra = "d4", mask = "full", out_path, map_spec, which = "rho1";
  bool classify = false, run_checks = false;

  auto* build = app.add_subcommand("build", "write a catalog algebra as JSON");
  build->add_option("--algebra", algebra, "catalog algebra")
      ->required()
      ->check(CLI::IsMember(algebra_names));
  build->add_option("--mask", mask, "group components")->check(CLI::IsMember(mask_names));
  build->add_option("--out", out_path, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the verification suite for an algebra");
  verify->add_option("--algebra", algebra)->required()->check(CLI::IsMember(algebra_names));
  verify->add_option("--mask", mask)->check(CLI::IsMember(mask_names));
  verify->add_option("--out", out_path, "report path (default stdout)");

  auto* rep = app.add_subcommand("rep", "build a representation and optionally check it");
  rep->add_option("--which", which)->required()->check(CLI::IsMember(rep_names));
  rep->add_flag("--check", run_checks, "verify homomorphism + irreducibility");
  rep->add_option("--out", out_path);

  auto* nice = app.add_subcommand("nice-sets", "nice-set enumeration");
  auto* enumerate = nice->add_subcommand("enumerate", "scan all 2^21 subsets");
  enumerate->add_flag("--classify", classify, "classify into collineation orbits");
  enumerate->add_option("--out", out_path);

  auto* contract_cmd = app.add_subcommand("contract", "contract a catalog algebra");
  contract_cmd->add_option("--algebra", algebra)->required()->check(CLI::IsMember(algebra_names));
  contract_cmd->add_option("--map", map_spec, "T<n> | eta:<q> | mu:<q> | beta:<q>,<q>")->required();
  contract_cmd->add_option("--mask", mask)->check(CLI::IsMember(mask_names));
  contract_cmd->add_option("--out", out_path);

  auto* survey = app.add_subcommand("survey", "fingerprints over the standard contraction maps");
  survey->add_option("--algebra", algebra)->required()->check(CLI::IsMember(algebra_names));
  survey->add_option("--mask", mask)->check(CLI::IsMember(mask_names));
  survey->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (build->parsed()) {
      const auto a = gga::catalog::make(algebra, parse_mask(mask));
      const std::string text = gga::algebra_to_json(a);
      if (out_path.empty()) {
        std::cout << text << "\n";
      } else {
        std::ofstream file(out_path);
        file << text << "\n";
        if (!file) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return 1;
        }
      }
      return 0;
    }

    if (verify->parsed()) {
      Report report;
      report.command = "verify --algebra " + algebra + " --mask " + mask;
      run_verify(report, algebra, mask);
      return report.emit(out_path);
    }

    if (rep->parsed()) {
      Report report;
      report.command = "rep --which " + which + (run_checks ? " --check" : "");
      gga::reps::Representation r =
          which == "b3"   ? gga::reps::rho7(gga::reps::Rho7::b3,
                                            gga::catalog::make("b3", gga::catalog::Mask::gx))
          : which == "g2" ? gga::reps::rho7(gga::reps::Rho7::g2,
                                            gga::catalog::make("g2", gga::catalog::Mask::gx))
                          : gga::reps::rho(which[3] - '0',
                                           gga::catalog::make("d4", gga::catalog::Mask::gx));
      report.stats["module_dim"] = r.module_dim;
      report.stats["operators"] = r.mats.size();
      if (run_checks) {
        report.check("homomorphism", gga::reps::verify_homomorphism(r).ok());
        report.check("irreducible", gga::reps::verify_irreducible(r));
      }
      return report.emit(out_path);
    }

    if (enumerate->parsed()) {
      Report report;
      report.command = std::string("nice-sets enumerate") + (classify ? " --classify" : "");
      const auto sets = gga::contractions::enumerate_nice();
      report.stats["nice_sets"] = sets.size();
      report.check("all_nice", true, std::to_string(sets.size()) + " nice subsets of X");
      if (classify) {
        const auto orbits = gga::contractions::orbit_classify(sets);
        report.stats["orbits"] = orbits.size();
        report.check("orbit_count", orbits.size() == 24,
                     std::to_string(orbits.size()) + " collineation orbits, expected 24");
        // Match each orbit against the T-catalog.
        nlohmann::ordered_json reps = nlohmann::ordered_json::array();
        int matched = 0;
        for (const auto& orbit : orbits) {
          nlohmann::ordered_json row;
          row["size"] = orbit.size();
          int hit = 0;
          for (int n = 1; n <= 24; ++n)
            if (std::find(orbit.begin(), orbit.end(), gga::contractions::nice_catalog()[n]) !=
                orbit.end()) {
              hit = n;
              break;
            }
          if (hit) ++matched;
          row["catalog"] = hit ? "T" + std::to_string(hit) : "unmatched";
          std::string pairs;
          for (auto [i, j] : orbit.front().pairs())
            pairs += "{" + std::to_string(i) + "," + std::to_string(j) + "}";
          row["representative"] = pairs.empty() ? "{}" : pairs;
          reps.push_back(std::move(row));
        }
        report.check("catalog_hits_all_orbits", matched == static_cast<int>(orbits.size()),
                     std::to_string(matched) + " orbits matched by T1..T24");
        report.stats["orbit_table"] = std::move(reps);
      }
      return report.emit(out_path);
    }

    if (contract_cmd->parsed()) {
      Report report;
      report.command = "contract --algebra " + algebra + " --map " + map_spec + " --mask " + mask;
      const auto base = gga::catalog::make(algebra, parse_mask(mask));
      const auto eps = gga::contractions::parse_map_spec(map_spec);
      const auto check = gga::contractions::verify_contraction(eps);
      report.check("graded_contraction", check.ok());
      const auto contracted = gga::contractions::contract(base, eps);
      report.check("lie_axioms", gga::verify_lie(contracted).ok());
      report.stats["fingerprint"] = fingerprint_json(gga::fingerprint(contracted));
      report.stats["support_size"] = gga::contractions::support(eps).size();
      return report.emit(out_path);
    }

    if (survey->parsed()) {
      Report report;
      report.command = "survey --algebra " + algebra + " --mask " + mask;
      const auto base = gga::catalog::make(algebra, parse_mask(mask));
      const auto rows =
          gga::contractions::contraction_survey(base, gga::contractions::standard_survey_maps());
      nlohmann::ordered_json table = nlohmann::ordered_json::array();
      bool all_lie = true;
      for (const auto& row : rows) {
        nlohmann::ordered_json r;
        r["algebra"] = row.algebra;
        r["map"] = row.map;
        r["lie"] = row.lie_ok;
        r["fingerprint"] = fingerprint_json(row.fp);
        all_lie &= row.lie_ok;
        table.push_back(std::move(r));
      }
      report.check("all_rows_lie", all_lie, std::to_string(rows.size()) + " contractions");
      report.stats["rows"] = std::move(table);
      return report.emit(out_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
