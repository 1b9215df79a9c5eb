// handlehom: exact handle-homology calculator.
//
// Exit codes: 0 ok, 1 usage, 2 parse/semantic error,
// 3 mathematical inconsistency or invariance violation.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "handlehom/catalog.hpp"
#include "handlehom/decomposition.hpp"
#include "handlehom/duality.hpp"
#include "handlehom/errors.hpp"
#include "handlehom/homology.hpp"
#include "handlehom/moves.hpp"
#include "handlehom/textio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitMath = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hh::HandleDecomposition load_input(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) {
    std::string name = source.substr(8);
    auto entry = hh::catalog_entry(name);
    if (!entry)
      throw hh::SemanticError("no catalog entry named '" + name + "'");
    return entry->decomposition;
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw UsageError("cannot read input file '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return hh::parse_decomposition(buf.str());
}

hh::CoefficientRing ring_from_flag(const std::string& flag) {
  if (flag == "z") return hh::CoefficientRing::Integers;
  if (flag == "z2") return hh::CoefficientRing::ModTwo;
  throw UsageError("--ring must be z or z2, got '" + flag + "'");
}

hh::SignConvention sign_from_flag(const std::string& flag) {
  if (flag == "geiges") return hh::SignConvention::GeigesSign;
  if (flag == "plain") return hh::SignConvention::Plain;
  throw UsageError("--sign must be geiges or plain, got '" + flag + "'");
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw UsageError("cannot write to '" + output_path + "'");
  out << text;
}

void print_profile(const hh::HomologyProfile& p, bool cohomology = false) {
  const int n = static_cast<int>(p.groups.size()) - 1;
  for (int k = 0; k <= n; ++k)
    std::cout << (cohomology ? "H^" : "H_") << k << " = "
              << p.groups[k].to_string() << "\n";
  std::cout << "betti:";
  for (std::size_t b : p.betti) std::cout << " " << b;
  std::cout << "\n";
  std::cout << "chi = " << p.euler << "\n";
}

int run_validate(const std::string& input) {
  hh::HandleDecomposition d = load_input(input);
  hh::ValidationReport report = hh::validate(d);
  std::cout << "dimension " << d.dimension
            << (d.relative ? ", relative" : ", closed") << ", orientation "
            << hh::to_string(d.orientation_mode) << "\n";
  for (std::size_t k = 0; k < report.handle_counts.size(); ++k)
    std::cout << "degree " << k << ": " << report.handle_counts[k]
              << " handle(s)\n";
  if (report.ok()) {
    std::cout << "no violations\n";
    return kExitOk;
  }
  bool math = false;
  for (const hh::Violation& v : report.violations) {
    std::cout << "violation " << hh::violation_name(v.code) << ": "
              << v.message << "\n";
    if (v.code == hh::Violation::Code::InconsistentBoundary) math = true;
  }
  return math ? kExitMath : kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact handle homology of compact manifolds"};
  app.require_subcommand(1);

  std::string input, ring_flag = "z", sign_flag = "geiges", output_path;
  std::string move_line;
  int steps = 100;
  std::uint64_t seed = 0;
  std::string catalog_name;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input,
                    "decomposition file, or catalog:<name> for a builtin")
        ->required();
  };

  CLI::App* c_validate = app.add_subcommand("validate", "check all invariants");
  add_input(c_validate);

  CLI::App* c_homology =
      app.add_subcommand("homology", "per-degree homology groups, betti, chi");
  add_input(c_homology);
  c_homology->add_option("--ring", ring_flag, "coefficients: z or z2");
  c_homology->add_option("--sign", sign_flag, "sign convention: geiges or plain");

  CLI::App* c_cohomology =
      app.add_subcommand("cohomology", "per-degree cohomology groups");
  add_input(c_cohomology);
  c_cohomology->add_option("--ring", ring_flag, "coefficients: z or z2");
  c_cohomology->add_option("--sign", sign_flag,
                           "sign convention: geiges or plain");

  CLI::App* c_euler = app.add_subcommand("euler", "Euler characteristic");
  add_input(c_euler);

  CLI::App* c_orient =
      app.add_subcommand("orientability", "classify from top homology");
  add_input(c_orient);

  CLI::App* c_dual =
      app.add_subcommand("dual", "emit the upside-down dual decomposition");
  add_input(c_dual);
  c_dual->add_option("--ring", ring_flag, "coefficients: z or z2");
  c_dual->add_option("-o,--output", output_path, "write to file");

  CLI::App* c_duality =
      app.add_subcommand("duality-check", "compare H^k with H_(n-k) of the dual");
  add_input(c_duality);
  c_duality->add_option("--ring", ring_flag, "coefficients: z or z2");

  CLI::App* c_move = app.add_subcommand("move", "apply one move");
  add_input(c_move);
  c_move->add_option("--apply", move_line, "move line, e.g. \"slide 1 a b +\"")
      ->required();
  c_move->add_option("-o,--output", output_path, "write to file");

  CLI::App* c_fuzz =
      app.add_subcommand("fuzz", "random moves asserting homology invariance");
  add_input(c_fuzz);
  c_fuzz->add_option("--steps", steps, "number of moves")->required();
  c_fuzz->add_option("--seed", seed, "RNG seed")->required();

  CLI::App* c_catalog =
      app.add_subcommand("catalog", "list builtin entries or emit one");
  c_catalog->add_option("name", catalog_name, "entry to emit as text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*c_validate) return run_validate(input);

    if (*c_homology || *c_cohomology) {
      hh::HandleDecomposition d = load_input(input);
      hh::ChainComplex c = hh::build_complex(d, sign_from_flag(sign_flag),
                                             ring_from_flag(ring_flag));
      bool co = static_cast<bool>(*c_cohomology);
      print_profile(co ? hh::cohomology(c) : hh::homology(c), co);
      return kExitOk;
    }

    if (*c_euler) {
      hh::HandleDecomposition d = load_input(input);
      std::cout << "chi = " << hh::euler_characteristic(d) << "\n";
      return kExitOk;
    }

    if (*c_orient) {
      hh::HandleDecomposition d = load_input(input);
      hh::OrientabilityResult r = hh::classify_orientability(d);
      std::cout << hh::to_string(r.value);
      if (!r.reason.empty()) std::cout << ": " << r.reason;
      std::cout << "\n";
      return kExitOk;
    }

    if (*c_dual) {
      hh::HandleDecomposition d = load_input(input);
      hh::HandleDecomposition dual =
          hh::dual_decomposition(d, ring_from_flag(ring_flag));
      emit(hh::serialize_decomposition(dual), output_path);
      return kExitOk;
    }

    if (*c_duality) {
      hh::HandleDecomposition d = load_input(input);
      hh::DualityReport report =
          hh::check_duality(d, ring_from_flag(ring_flag));
      std::cout << report.render();
      if (!report.applicable) {
        std::cerr << "not applicable: " << report.reason << "\n";
        return kExitParse;
      }
      return report.all_isomorphic ? kExitOk : kExitMath;
    }

    if (*c_move) {
      hh::HandleDecomposition d = load_input(input);
      hh::HandleDecomposition out =
          hh::apply_move(d, hh::parse_move(move_line));
      emit(hh::serialize_decomposition(out), output_path);
      return kExitOk;
    }

    if (*c_fuzz) {
      hh::HandleDecomposition d = load_input(input);
      try {
        hh::MoveJournal journal = hh::fuzz_moves(d, steps, seed);
        std::cout << "ok: " << journal.moves.size()
                  << " moves, homology and chi invariant\n";
        return kExitOk;
      } catch (const hh::InvarianceViolationError& e) {
        std::cerr << "invariance violation: " << e.what() << "\n";
        std::cout << hh::serialize_journal(e.journal);
        return kExitMath;
      }
    }

    if (*c_catalog) {
      if (catalog_name.empty()) {
        for (const hh::CatalogEntry& e : hh::catalog())
          std::cout << e.name << ": dimension "
                    << e.decomposition.dimension << ", "
                    << (e.orientable ? "orientable" : "non-orientable") << ", "
                    << e.notes << "\n";
        return kExitOk;
      }
      auto entry = hh::catalog_entry(catalog_name);
      if (!entry)
        throw hh::SemanticError("no catalog entry named '" + catalog_name +
                                "'");
      emit(hh::serialize_decomposition(entry->decomposition), output_path);
      return kExitOk;
    }

    throw UsageError("no subcommand selected");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hh::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hh::MathError& e) {
    std::cerr << "inconsistent input: " << e.what() << "\n";
    return kExitMath;
  } catch (const hh::SemanticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hh::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
