#pragma once

#include <string>
#include <vector>

#include "handlehom/decomposition.hpp"
#include "handlehom/homology.hpp"

namespace hh {

/// Reads the decomposition upside down: every k-handle becomes an
/// (n-k)-handle, with the dual intersection data the transpose of the
/// original (reduced mod 2 when the ring is Z/2).
///
/// Over the integers this is only valid for data signed against an ambient
/// orientation; for cooriented or mod-2-only input it throws NotApplicable.
HandleDecomposition dual_decomposition(
    const HandleDecomposition& d,
    CoefficientRing ring = CoefficientRing::Integers);

struct DualityRow {
  int degree;                // k
  AbelianGroup cohomology;   // H^k(M, bdry_-)
  AbelianGroup dual_homology;  // H_{n-k} of the dual decomposition
  bool isomorphic;
};

struct DualityReport {
  CoefficientRing ring = CoefficientRing::Integers;
  bool applicable = false;
  std::string reason;  // filled when not applicable
  std::vector<DualityRow> rows;
  bool all_isomorphic = false;

  /// Aligned text table for the CLI.
  std::string render() const;
};

/// Compares H^k of the original complex with H_{n-k} of the dual
/// decomposition's complex for every k. Not-applicable inputs yield a
/// report with applicable = false instead of throwing.
DualityReport check_duality(const HandleDecomposition& d, CoefficientRing ring);

}  // namespace hh
