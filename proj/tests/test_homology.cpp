#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "handlehom/catalog.hpp"
#include "handlehom/homology.hpp"
#include "support.hpp"

using hh::AbelianGroup;
using hh::CoefficientRing;
using hh::HandleDecomposition;
using hh::Int;
using hh::IntMat;
using hh::SignConvention;

namespace {

hh::HomologyProfile integral_homology(const HandleDecomposition& d,
                                      SignConvention s = SignConvention::GeigesSign) {
  return hh::homology(hh::build_complex(d, s));
}

}  // namespace

TEST_CASE("AbelianGroup rendering") {
  CHECK(AbelianGroup{0, {}}.to_string() == "0");
  CHECK(AbelianGroup{1, {}}.to_string() == "Z");
  CHECK(AbelianGroup{3, {}}.to_string() == "Z^3");
  CHECK(AbelianGroup{0, {Int(2)}}.to_string() == "Z/2");
  CHECK(AbelianGroup{1, {Int(2), Int(4)}}.to_string() == "Z + Z/2 + Z/4");
}

TEST_CASE("RP2: (Z, Z/2, 0) over Z, dimensions (1,1,1) over Z/2") {
  auto d = hh::catalog_entry("RP2")->decomposition;
  auto h = integral_homology(d);
  CHECK(h.groups[0] == AbelianGroup{1, {}});
  CHECK(h.groups[1] == AbelianGroup{0, {Int(2)}});
  CHECK(h.groups[2].trivial());
  CHECK(h.euler == 1);

  auto h2 = hh::homology(
      hh::build_complex(d, SignConvention::GeigesSign, CoefficientRing::ModTwo));
  CHECK(h2.betti == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("S2 and torus: zero boundaries make homology the chain groups") {
  auto s2 = integral_homology(hh::catalog_entry("S2")->decomposition);
  CHECK(s2.groups[0] == AbelianGroup{1, {}});
  CHECK(s2.groups[1].trivial());
  CHECK(s2.groups[2] == AbelianGroup{1, {}});

  auto t2 = integral_homology(hh::catalog_entry("T2")->decomposition);
  CHECK(t2.groups[1] == AbelianGroup{2, {}});
  CHECK(t2.euler == 0);
}

TEST_CASE("cohomology worked examples") {
  auto d = hh::catalog_entry("RP2")->decomposition;
  auto h = hh::cohomology(hh::build_complex(d, SignConvention::GeigesSign));
  CHECK(h.groups[0] == AbelianGroup{1, {}});
  CHECK(h.groups[1].trivial());
  CHECK(h.groups[2] == AbelianGroup{0, {Int(2)}});

  auto s2 = hh::cohomology(hh::build_complex(
      hh::catalog_entry("S2")->decomposition, SignConvention::GeigesSign));
  CHECK(s2.groups[0] == AbelianGroup{1, {}});
  CHECK(s2.groups[2] == AbelianGroup{1, {}});

  // all-zero boundaries: H^k equals H_k
  auto t2c = hh::build_complex(hh::catalog_entry("T2")->decomposition,
                               SignConvention::GeigesSign);
  CHECK(hh::cohomology(t2c).groups == hh::homology(t2c).groups);
}

TEST_CASE("euler characteristic from handle counts") {
  CHECK(hh::euler_characteristic(hh::catalog_entry("S2")->decomposition) == 2);
  CHECK(hh::euler_characteristic(hh::catalog_entry("RP2")->decomposition) == 1);
  CHECK(hh::euler_characteristic(hh::catalog_entry("T2")->decomposition) == 0);
  CHECK(hh::euler_characteristic(hh::catalog_entry("Sigma3")->decomposition) ==
        -4);
}

TEST_CASE("orientability classification") {
  using hh::Orientability;
  auto classify = [](const char* name) {
    return hh::classify_orientability(hh::catalog_entry(name)->decomposition)
        .value;
  };
  CHECK(classify("RP2") == Orientability::NonOrientable);
  CHECK(classify("T2") == Orientability::Orientable);
  CHECK(classify("Klein") == Orientability::NonOrientable);
  CHECK(classify("RP3") == Orientability::Orientable);

  // preconditions: relative, mod-2-only and disconnected inputs
  HandleDecomposition rel = hh::catalog_entry("T2")->decomposition;
  rel.relative = true;
  CHECK(hh::classify_orientability(rel).value == Orientability::Inapplicable);

  HandleDecomposition m2 = hh::catalog_entry("T2")->decomposition;
  m2.orientation_mode = hh::OrientationMode::ModTwoOnly;
  m2.intersections[0] = m2.intersections[0].reduced_mod2();
  m2.intersections[1] = m2.intersections[1].reduced_mod2();
  CHECK(hh::classify_orientability(m2).value == Orientability::Inapplicable);

  HandleDecomposition two_points = HandleDecomposition::empty(1);
  two_points.handles[0] = {"p", "q"};
  two_points.boundary_data(1) = IntMat(2, 0);
  auto r = hh::classify_orientability(two_points);
  CHECK(r.value == Orientability::Inapplicable);
  CHECK(r.reason.find("H_0") != std::string::npos);
}

TEST_CASE("Klein bottle against an independent cellular computation") {
  // Standard CW structure of the Klein bottle: one 0-cell, 1-cells a, b,
  // one 2-cell glued along a b a^{-1} b, boundary (0, 2)^T. Groups computed
  // here with the gcd-of-minors oracle only.
  IntMat d2 = IntMat::from_rows({{0}, {2}});
  auto factors = testsupport::snf_oracle(d2);
  REQUIRE(factors == std::vector<Int>{Int(2)});
  std::size_t rank_d2 = factors.size();
  AbelianGroup h1_expected{2 - rank_d2, {Int(2)}};

  auto h = integral_homology(hh::catalog_entry("Klein")->decomposition);
  CHECK(h.groups[1] == h1_expected);
  CHECK(h.groups[2].trivial());
}

TEST_CASE("L(5,1) against an independent cellular computation") {
  // Lens space CW structure: one cell per dimension, d_2 = [5], d_3 = [0].
  auto factors = testsupport::snf_oracle(IntMat::from_rows({{5}}));
  REQUIRE(factors == std::vector<Int>{Int(5)});
  auto h = integral_homology(hh::catalog_entry("L(5,1)")->decomposition);
  CHECK(h.groups[0] == AbelianGroup{1, {}});
  CHECK(h.groups[1] == AbelianGroup{0, {Int(5)}});
  CHECK(h.groups[2].trivial());
  CHECK(h.groups[3] == AbelianGroup{1, {}});
}

TEST_CASE("properties on random valid complexes") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 60; ++trial) {
    auto d = testsupport::random_valid_decomposition(rng);
    auto geiges = integral_homology(d, SignConvention::GeigesSign);
    auto plain = integral_homology(d, SignConvention::Plain);
    // sign-convention independence
    CHECK(geiges == plain);

    auto complex = hh::build_complex(d, SignConvention::GeigesSign);
    auto co = hh::cohomology(complex);
    const int n = d.dimension;
    for (int k = 0; k <= n; ++k) {
      // universal coefficients: free parts agree, torsion shifts down
      CHECK(co.groups[k].free_rank == geiges.groups[k].free_rank);
      std::vector<Int> below =
          k > 0 ? geiges.groups[k - 1].torsion : std::vector<Int>{};
      CHECK(co.groups[k].torsion == below);
    }

    auto mod2 = hh::homology(hh::build_complex(d, SignConvention::GeigesSign,
                                               CoefficientRing::ModTwo));
    for (int k = 0; k <= n; ++k) {
      // dim H_k(Z/2) = rk H_k + #even torsion in degrees k and k-1
      std::size_t expected = geiges.groups[k].free_rank;
      for (const Int& t : geiges.groups[k].torsion)
        if (t % 2 == 0) ++expected;
      if (k > 0)
        for (const Int& t : geiges.groups[k - 1].torsion)
          if (t % 2 == 0) ++expected;
      CHECK(mod2.betti[k] == expected);
    }

    // chi agrees between handle counts and both homology theories
    long chi = hh::euler_characteristic(d);
    long chi_h = 0, chi_2 = 0;
    for (int k = 0; k <= n; ++k) {
      chi_h += (k % 2 == 0 ? 1 : -1) * static_cast<long>(geiges.betti[k]);
      chi_2 += (k % 2 == 0 ? 1 : -1) * static_cast<long>(mod2.betti[k]);
    }
    CHECK(chi == chi_h);
    CHECK(chi == chi_2);

  }
}

TEST_CASE("H_0 keeps a free generator when 1-handles attach like a graph") {
  // Absolute (non-relative) 1-handle columns are e_p - e_q or zero: the two
  // attaching points carry opposite signs. Then im d_1 lies in the sum-zero
  // sublattice and H_0 has free rank >= 1.
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 40; ++trial) {
    int verts = 1 + static_cast<int>(rng() % 5);
    int edges = static_cast<int>(rng() % 6);
    HandleDecomposition d = HandleDecomposition::empty(1);
    for (int v = 0; v < verts; ++v) d.handles[0].push_back("v" + std::to_string(v));
    for (int e = 0; e < edges; ++e) d.handles[1].push_back("e" + std::to_string(e));
    IntMat m(verts, edges);
    for (int e = 0; e < edges; ++e) {
      std::size_t p = rng() % verts, q = rng() % verts;
      if (p != q) {
        m.at(p, e) = 1;
        m.at(q, e) = -1;
      }
    }
    d.boundary_data(1) = std::move(m);
    auto h = hh::homology(hh::build_complex(d, SignConvention::GeigesSign));
    CHECK(h.groups[0].free_rank >= 1);
  }
}
