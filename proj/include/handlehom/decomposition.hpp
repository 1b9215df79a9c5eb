#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "handlehom/intmat.hpp"

namespace hh {

/// Which convention the input intersection signs follow.
enum class OrientationMode { OrientedAmbient, Cooriented, ModTwoOnly };

/// GeigesSign multiplies the raw counts by (-1)^(k-1) in degree k;
/// Plain uses them as-is. Both yield the same homology.
enum class SignConvention { GeigesSign, Plain };

enum class CoefficientRing { Integers, ModTwo };

/// Combinatorial handle decomposition: labelled handles per index plus the
/// raw signed intersection counts of attaching spheres with belt spheres.
/// The data is convention-free; signs are applied only in build_complex.
struct HandleDecomposition {
  int dimension = 0;
  bool relative = false;
  OrientationMode orientation_mode = OrientationMode::OrientedAmbient;

  /// handles[k] lists the k-handle labels, k = 0..dimension.
  std::vector<std::vector<std::string>> handles;

  /// intersections[k-1] is D_k, shape |handles[k-1]| x |handles[k]|,
  /// entry (nu, mu) the raw count A_k^mu . B_{k-1}^nu, k = 1..dimension.
  std::vector<IntMat> intersections;

  static HandleDecomposition empty(int dimension);

  int handle_count(int k) const;
  const IntMat& boundary_data(int k) const;  // D_k, 1 <= k <= dimension
  IntMat& boundary_data(int k);

  /// Position of a label within degree k, if present.
  std::optional<std::size_t> handle_index(int k, const std::string& label) const;

  /// Appends a handle in degree k, growing the adjacent matrices by a zero
  /// row/column. Returns its position.
  std::size_t add_handle(int k, const std::string& label);

  /// Removes a handle and its row/column in the adjacent matrices.
  void remove_handle(int k, std::size_t index);

  /// Semantic equality: same dimension, flags, per-degree label sets and
  /// label-indexed intersection entries. Insertion order does not matter.
  bool operator==(const HandleDecomposition& other) const;
};

/// Graded free complex with integer boundary matrices, d . d = 0.
struct ChainComplex {
  CoefficientRing ring = CoefficientRing::Integers;
  std::vector<std::size_t> ranks;                       // c_0..c_n
  std::vector<IntMat> boundaries;                       // d_1..d_n
  std::vector<std::vector<std::string>> generator_labels;

  int top_degree() const { return static_cast<int>(ranks.size()) - 1; }
  /// d_k; degrees outside 1..n read as zero matrices of fitting shape.
  IntMat boundary(int k) const;
};

struct Violation {
  enum class Code {
    BadDimension,
    EmptyLabel,
    BadLabel,
    DuplicateLabel,
    ShapeMismatch,
    NonBinaryModTwoEntry,
    InconsistentBoundary,
  };
  Code code;
  std::string message;
};

struct ValidationReport {
  std::vector<std::size_t> handle_counts;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

const char* violation_name(Violation::Code code);

/// Diagnostic pass over all invariants; never throws.
ValidationReport validate(const HandleDecomposition& d);

/// Throws (ShapeError, DuplicateLabelError, SemanticError,
/// InconsistentBoundaryError) if d fails any invariant.
void require_valid(const HandleDecomposition& d);

/// d_k = sign(s,k) * D_k, entries reduced mod 2 for ring ModTwo.
/// Verifies d.d = 0 and throws InconsistentBoundaryError otherwise.
ChainComplex build_complex(const HandleDecomposition& d, SignConvention s,
                           CoefficientRing ring = CoefficientRing::Integers);

std::string to_string(OrientationMode mode);
std::string to_string(SignConvention s);
std::string to_string(CoefficientRing ring);

}  // namespace hh
