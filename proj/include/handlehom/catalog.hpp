#pragma once

#include <optional>
#include <string>
#include <vector>

#include "handlehom/decomposition.hpp"
#include "handlehom/homology.hpp"

namespace hh {

/// A named standard decomposition with its expected invariants.
struct CatalogEntry {
  std::string name;
  HandleDecomposition decomposition;
  HomologyProfile expected_integral;
  HomologyProfile expected_mod2;
  bool orientable = true;
  std::string notes;
};

/// Builtin entries: S1..S5, T2, Sigma2, Sigma3, RP2, Klein, RP3,
/// L(3,1), L(5,1).
const std::vector<CatalogEntry>& catalog();

std::optional<CatalogEntry> catalog_entry(const std::string& name);

}  // namespace hh
