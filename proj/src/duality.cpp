#include "handlehom/duality.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "handlehom/errors.hpp"

namespace hh {

namespace {

std::string integral_obstruction(const HandleDecomposition& d) {
  if (d.orientation_mode == OrientationMode::ModTwoOnly)
    return "input carries mod-2 data only; integral duality needs signed "
           "intersection numbers against an ambient orientation";
  if (d.orientation_mode == OrientationMode::Cooriented)
    return "input is cooriented (non-orientable convention); over the "
           "integers the dual boundary is not the transpose";
  return "";
}

}  // namespace

HandleDecomposition dual_decomposition(const HandleDecomposition& d,
                                       CoefficientRing ring) {
  require_valid(d);
  if (ring == CoefficientRing::Integers) {
    std::string why = integral_obstruction(d);
    if (!why.empty()) throw NotApplicableError(why);
  }

  const int n = d.dimension;
  HandleDecomposition out = HandleDecomposition::empty(n);
  out.relative = d.relative;  // roles of the two boundaries swap
  out.orientation_mode = ring == CoefficientRing::ModTwo
                             ? OrientationMode::ModTwoOnly
                             : d.orientation_mode;
  for (int j = 0; j <= n; ++j) out.handles[j] = d.handles[n - j];
  // D'_{n-k+1} = (D_k)^T; the per-degree sign is free (the composite is zero
  // for any choice), so take +.
  for (int j = 1; j <= n; ++j) {
    IntMat m = d.boundary_data(n - j + 1).transposed();
    if (ring == CoefficientRing::ModTwo) m = m.reduced_mod2();
    out.boundary_data(j) = std::move(m);
  }
  require_valid(out);
  return out;
}

DualityReport check_duality(const HandleDecomposition& d,
                            CoefficientRing ring) {
  require_valid(d);
  DualityReport report;
  report.ring = ring;
  if (ring == CoefficientRing::Integers) {
    std::string why = integral_obstruction(d);
    if (!why.empty()) {
      report.reason = why;
      return report;
    }
  }
  report.applicable = true;

  HandleDecomposition dual = dual_decomposition(d, ring);
  HomologyProfile upper =
      cohomology(build_complex(d, SignConvention::GeigesSign, ring));
  HomologyProfile lower =
      homology(build_complex(dual, SignConvention::GeigesSign, ring));

  const int n = d.dimension;
  report.all_isomorphic = true;
  for (int k = 0; k <= n; ++k) {
    DualityRow row;
    row.degree = k;
    row.cohomology = upper.groups[k];
    row.dual_homology = lower.groups[n - k];
    row.isomorphic = row.cohomology == row.dual_homology;
    report.all_isomorphic = report.all_isomorphic && row.isomorphic;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string DualityReport::render() const {
  std::ostringstream out;
  out << "ring: " << to_string(ring) << "\n";
  if (!applicable) {
    out << "not applicable: " << reason << "\n";
    return out.str();
  }
  std::size_t w1 = 8, w2 = 12;
  for (const DualityRow& r : rows) {
    w1 = std::max(w1, r.cohomology.to_string().size());
    w2 = std::max(w2, r.dual_homology.to_string().size());
  }
  const int n = static_cast<int>(rows.size()) - 1;
  out << std::left << std::setw(4) << "k" << std::setw(w1 + 2) << "H^k"
      << std::setw(w2 + 2) << ("H_(" + std::to_string(n) + "-k) dual")
      << "match"
      << "\n";
  for (const DualityRow& r : rows)
    out << std::left << std::setw(4) << r.degree << std::setw(w1 + 2)
        << r.cohomology.to_string() << std::setw(w2 + 2)
        << r.dual_homology.to_string() << (r.isomorphic ? "yes" : "NO")
        << "\n";
  out << "all isomorphic: " << (all_isomorphic ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace hh
