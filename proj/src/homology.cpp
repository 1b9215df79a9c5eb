#include "handlehom/homology.hpp"

#include <sstream>

#include "handlehom/errors.hpp"

namespace hh {

std::string AbelianGroup::to_string() const {
  if (trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  if (free_rank > 0) {
    out << "Z";
    if (free_rank > 1) out << "^" << free_rank;
    first = false;
  }
  for (const Int& t : torsion) {
    out << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  return out.str();
}

namespace {

HomologyProfile profile_from_boundaries(CoefficientRing ring,
                                        const std::vector<std::size_t>& ranks,
                                        const std::vector<IntMat>& maps) {
  // maps[k] carries generators of degree k; maps[k] itself is the map out of
  // degree k into degree k-1 (or, for cohomology, out of degree k read on the
  // transposed complex). Torsion of degree k comes from maps[k+1].
  const int n = static_cast<int>(ranks.size()) - 1;
  std::vector<std::size_t> map_rank(n + 2, 0);
  std::vector<std::vector<Int>> factors(n + 2);
  for (int k = 1; k <= n; ++k) {
    if (ring == CoefficientRing::ModTwo) {
      map_rank[k] = rank_mod2(maps[k - 1]);
    } else {
      SnfResult s = snf(maps[k - 1]);
      map_rank[k] = s.rank;
      factors[k] = std::move(s.diagonal);
    }
  }
  HomologyProfile profile;
  profile.ring = ring;
  for (int k = 0; k <= n; ++k) {
    AbelianGroup g;
    std::size_t killed = map_rank[k] + map_rank[k + 1];
    if (killed > ranks[k])
      throw MathError("rank defect in degree " + std::to_string(k) +
                      "; boundary composition cannot be zero");
    if (ring == CoefficientRing::ModTwo) {
      // dim H_k as a Z/2 vector space, encoded as (Z/2)^dim.
      std::size_t dim = ranks[k] - killed;
      g.torsion.assign(dim, Int(2));
      profile.betti.push_back(dim);
    } else {
      g.free_rank = ranks[k] - killed;
      for (const Int& f : factors[k + 1])
        if (f > 1) g.torsion.push_back(f);
      profile.betti.push_back(g.free_rank);
    }
    profile.groups.push_back(std::move(g));
  }
  long chi = 0;
  for (int k = 0; k <= n; ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(ranks[k]);
  profile.euler = chi;
  return profile;
}

}  // namespace

HomologyProfile homology(const ChainComplex& c) {
  return profile_from_boundaries(c.ring, c.ranks, c.boundaries);
}

HomologyProfile cohomology(const ChainComplex& c) {
  // H^k = ker(d_{k+1}^T)/im(d_k^T). Transposing all boundaries and reading
  // the grading upside down gives an honest chain complex E with
  // E_j = C^(n-j) and boundary d^E_j = d_(n-j+1)^T; then H^k = H_(n-k)(E).
  const int n = c.top_degree();
  std::vector<std::size_t> ranks(c.ranks.rbegin(), c.ranks.rend());
  std::vector<IntMat> maps;
  for (int j = 1; j <= n; ++j)
    maps.push_back(c.boundary(n - j + 1).transposed());
  HomologyProfile p = profile_from_boundaries(c.ring, ranks, maps);
  HomologyProfile out;
  out.ring = c.ring;
  out.groups.assign(p.groups.rbegin(), p.groups.rend());
  out.betti.assign(p.betti.rbegin(), p.betti.rend());
  long chi = 0;
  for (int k = 0; k <= n; ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(c.ranks[k]);
  out.euler = chi;
  return out;
}

long euler_characteristic(const HandleDecomposition& d) {
  long chi = 0;
  for (int k = 0; k <= d.dimension; ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(d.handles[k].size());
  return chi;
}

OrientabilityResult classify_orientability(const HandleDecomposition& d) {
  if (d.relative)
    return {Orientability::Inapplicable,
            "relative decomposition; classification needs a closed manifold"};
  if (d.orientation_mode == OrientationMode::ModTwoOnly)
    return {Orientability::Inapplicable,
            "mod-2 intersection data cannot see integral top homology"};
  HomologyProfile h = homology(
      build_complex(d, SignConvention::GeigesSign, CoefficientRing::Integers));
  const AbelianGroup& h0 = h.groups.front();
  if (!(h0.free_rank == 1 && h0.torsion.empty()))
    return {Orientability::Inapplicable,
            "H_0 = " + h0.to_string() + ", expected Z (connected manifold)"};
  const AbelianGroup& top = h.groups.back();
  if (top.free_rank == 1 && top.torsion.empty())
    return {Orientability::Orientable, ""};
  if (top.trivial()) return {Orientability::NonOrientable, ""};
  return {Orientability::Inapplicable,
          "H_n = " + top.to_string() +
              ", expected Z or 0 (closed connected manifold)"};
}

std::string to_string(Orientability o) {
  switch (o) {
    case Orientability::Orientable: return "orientable";
    case Orientability::NonOrientable: return "non-orientable";
    case Orientability::Inapplicable: return "inapplicable";
  }
  return "?";
}

}  // namespace hh
