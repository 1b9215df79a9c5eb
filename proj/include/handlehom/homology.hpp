#pragma once

#include <string>
#include <vector>

#include "handlehom/decomposition.hpp"
#include "handlehom/intmat.hpp"

namespace hh {

/// Finitely generated abelian group in canonical form: free rank plus a
/// divisibility chain of torsion coefficients t_1 | t_2 | ..., each >= 2.
/// Equal values mean isomorphic groups.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup& other) const = default;

  /// "Z^r + Z/t1 + Z/t2 ...", "0" when trivial.
  std::string to_string() const;
};

struct HomologyProfile {
  CoefficientRing ring = CoefficientRing::Integers;
  std::vector<AbelianGroup> groups;  // degree 0..n
  std::vector<std::size_t> betti;    // free ranks (Z) or dimensions (Z/2)
  long euler = 0;

  bool operator==(const HomologyProfile& other) const = default;
};

/// Homology of the complex via Smith normal form: free rank
/// c_k - rank d_k - rank d_{k+1}, torsion the invariant factors > 1 of
/// d_{k+1}. Over Z/2 everything reduces to ranks over the field.
HomologyProfile homology(const ChainComplex& c);

/// Cohomology from the transposed boundary maps, graded by raised degree:
/// groups[k] = H^k = ker(d_{k+1}^T) / im(d_k^T).
HomologyProfile cohomology(const ChainComplex& c);

/// Alternating sum of handle counts.
long euler_characteristic(const HandleDecomposition& d);

enum class Orientability { Orientable, NonOrientable, Inapplicable };

struct OrientabilityResult {
  Orientability value = Orientability::Inapplicable;
  std::string reason;  // filled for Inapplicable
};

/// Closed connected case: H_n = Z means orientable, H_n = 0 means not.
/// Relative, mod-2-only or disconnected input is Inapplicable.
OrientabilityResult classify_orientability(const HandleDecomposition& d);

std::string to_string(Orientability o);

}  // namespace hh
