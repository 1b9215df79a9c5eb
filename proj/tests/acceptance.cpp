// Acceptance suite: exact reproduction of the worked examples plus the
// property campaigns, one pass/fail line per criterion. Exits nonzero if
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "handlehom/catalog.hpp"
#include "handlehom/decomposition.hpp"
#include "handlehom/duality.hpp"
#include "handlehom/errors.hpp"
#include "handlehom/homology.hpp"
#include "handlehom/moves.hpp"
#include "handlehom/textio.hpp"
#include "support.hpp"

using namespace hh;
using testsupport::random_valid_decomposition;
using testsupport::snf_oracle;
using testsupport::unit_pivots;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << (detail.str().empty() ? "" : "; ") << what;
    }
  }
};

HomologyProfile integral(const HandleDecomposition& d,
                         SignConvention s = SignConvention::GeigesSign) {
  return homology(build_complex(d, s));
}

HomologyProfile mod2(const HandleDecomposition& d) {
  return homology(
      build_complex(d, SignConvention::GeigesSign, CoefficientRing::ModTwo));
}

// 1. RP2: integral (Z, Z/2, 0), mod-2 dims (1,1,1), chi = 1, non-orientable,
//    integer duality not applicable.
void criterion_rp2(Check& c) {
  HandleDecomposition d = HandleDecomposition::empty(2);
  d.orientation_mode = OrientationMode::Cooriented;
  d.handles[0] = {"h0"};
  d.handles[1] = {"h1"};
  d.handles[2] = {"h2"};
  d.boundary_data(1) = IntMat::from_rows({{0}});
  d.boundary_data(2) = IntMat::from_rows({{2}});

  auto h = integral(d);
  c.require(h.groups[0] == AbelianGroup{1, {}}, "H_0 != Z");
  c.require(h.groups[1] == AbelianGroup{0, {Int(2)}}, "H_1 != Z/2");
  c.require(h.groups[2].trivial(), "H_2 != 0");
  c.require(mod2(d).betti == std::vector<std::size_t>{1, 1, 1},
            "mod-2 dims != (1,1,1)");
  c.require(euler_characteristic(d) == 1, "chi != 1");
  c.require(classify_orientability(d).value == Orientability::NonOrientable,
            "not classified NonOrientable");
  c.require(!check_duality(d, CoefficientRing::Integers).applicable,
            "integer duality unexpectedly applicable");
}

// 2. Slide worked example: d_2 h2 = -h1 becomes h1' - h1_new.
void criterion_slide(Check& c) {
  HandleDecomposition d = HandleDecomposition::empty(2);
  d.relative = true;
  d.handles[1] = {"h1", "h1p"};
  d.handles[2] = {"h2"};
  d.boundary_data(1) = IntMat(0, 2);
  d.boundary_data(2) = IntMat::from_rows({{1}, {0}});
  c.require(build_complex(d, SignConvention::GeigesSign).boundaries[1] ==
                IntMat::from_rows({{-1}, {0}}),
            "setup: d_2 h2 != -h1");

  HandleDecomposition after = slide(d, 1, "h1", "h1p", +1);
  c.require(build_complex(after, SignConvention::GeigesSign).boundaries[1] ==
                IntMat::from_rows({{-1}, {1}}),
            "d_2 h2_new != h1p - h1_new");
  c.require(integral(after) == integral(d), "homology changed by the slide");
}

// 3. 1000-step fuzz at 10 fixed seeds per catalog entry.
void criterion_fuzz(Check& c) {
  for (const CatalogEntry& entry : catalog()) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      try {
        fuzz_moves(entry.decomposition, 1000, seed);
      } catch (const InvarianceViolationError& e) {
        c.require(false, entry.name + " seed " + std::to_string(seed) + ": " +
                             e.what());
        return;
      }
    }
  }
}

// 4. Cancellation preserves homology on 200 random complexes with a unit
//    pivot.
void criterion_cancel(Check& c) {
  std::mt19937_64 rng(1803);
  int done = 0;
  while (done < 200) {
    HandleDecomposition d = random_valid_decomposition(rng);
    auto pivots = unit_pivots(d);
    if (pivots.empty()) continue;
    const auto& p = pivots[rng() % pivots.size()];
    auto before_z = integral(d);
    auto before_2 = mod2(d);
    HandleDecomposition reduced = cancel(d, p.degree, p.k_handle, p.km1_handle);
    if (!(integral(reduced) == before_z)) {
      c.require(false, "integral homology changed, sample " +
                           std::to_string(done));
      return;
    }
    if (!(mod2(reduced) == before_2)) {
      c.require(false, "mod-2 homology changed, sample " +
                           std::to_string(done));
      return;
    }
    ++done;
  }
}

// 5. Poincare duality: integers on oriented closed entries, Z/2 on all.
void criterion_duality(Check& c) {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.orientable) {
      auto report = check_duality(entry.decomposition, CoefficientRing::Integers);
      c.require(report.applicable && report.all_isomorphic,
                entry.name + " fails integral duality");
    }
    auto report2 = check_duality(entry.decomposition, CoefficientRing::ModTwo);
    c.require(report2.applicable && report2.all_isomorphic,
              entry.name + " fails mod-2 duality");
  }
}

// 6. Orientability classification matches the catalog flags.
void criterion_orientability(Check& c) {
  for (const CatalogEntry& entry : catalog()) {
    auto r = classify_orientability(entry.decomposition);
    Orientability expected = entry.orientable ? Orientability::Orientable
                                              : Orientability::NonOrientable;
    c.require(r.value == expected, entry.name + " classified " +
                                       to_string(r.value));
  }
}

// 7. Sign-convention independence and universal coefficients on 500 random
//    complexes.
void criterion_signs_uct(Check& c) {
  std::mt19937_64 rng(905);
  for (int trial = 0; trial < 500; ++trial) {
    HandleDecomposition d = random_valid_decomposition(rng);
    auto geiges = integral(d, SignConvention::GeigesSign);
    auto plain = integral(d, SignConvention::Plain);
    if (!(geiges == plain)) {
      c.require(false, "sign conventions disagree on trial " +
                           std::to_string(trial));
      return;
    }
    auto co = cohomology(build_complex(d, SignConvention::GeigesSign));
    for (int k = 0; k <= d.dimension; ++k) {
      if (co.groups[k].free_rank != geiges.groups[k].free_rank) {
        c.require(false, "free rank H^k != H_k on trial " +
                             std::to_string(trial));
        return;
      }
      std::vector<Int> below =
          k > 0 ? geiges.groups[k - 1].torsion : std::vector<Int>{};
      if (co.groups[k].torsion != below) {
        c.require(false, "torsion H^k != torsion H_(k-1) on trial " +
                             std::to_string(trial));
        return;
      }
    }
  }
}

// 8. SNF equals the gcd-of-minors oracle on 1000 random matrices up to 6x6.
void criterion_snf(Check& c) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    IntMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = static_cast<long>(rng() % 19) - 9;
    if (snf(m).diagonal != snf_oracle(m)) {
      c.require(false, "mismatch on trial " + std::to_string(trial) + ": " +
                           m.to_string());
      return;
    }
  }
}

// 9. parse . serialize is the identity on catalog entries and fuzz results.
void criterion_roundtrip(Check& c) {
  for (const CatalogEntry& entry : catalog()) {
    const std::string text = serialize_decomposition(entry.decomposition);
    HandleDecomposition back = parse_decomposition(text);
    c.require(back == entry.decomposition, entry.name + " round trip broken");
    c.require(serialize_decomposition(back) == text,
              entry.name + " serialization not canonical");
  }
  std::mt19937_64 rng(12);
  int produced = 0;
  while (produced < 100) {
    const CatalogEntry& entry = catalog()[rng() % catalog().size()];
    if (entry.decomposition.dimension < 1) continue;
    MoveJournal journal = fuzz_moves(entry.decomposition, 20, rng());
    const std::string text = serialize_decomposition(journal.result);
    if (!(parse_decomposition(text) == journal.result)) {
      c.require(false, "fuzzed " + entry.name + " round trip broken");
      return;
    }
    ++produced;
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* description;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 RP2 reproduction (homology, mod-2 dims, chi, orientability, duality)",
       criterion_rp2},
      {"2 handle-slide worked example", criterion_slide},
      {"3 Cerf-invariance fuzz, catalog x 10 seeds x 1000 steps",
       criterion_fuzz},
      {"4 cancellation preserves homology on 200 random complexes",
       criterion_cancel},
      {"5 Poincare duality on the catalog", criterion_duality},
      {"6 orientability classification matches catalog flags",
       criterion_orientability},
      {"7 sign-convention independence + universal coefficients, 500 samples",
       criterion_signs_uct},
      {"8 SNF vs gcd-of-minors oracle, 1000 matrices", criterion_snf},
      {"9 text format round trip", criterion_roundtrip},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << (check.ok ? "PASS" : "FAIL") << " criterion "
              << criterion.description << " [" << ms << " ms]";
    if (!check.ok) std::cout << " -- " << check.detail.str();
    std::cout << "\n";
    if (!check.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
