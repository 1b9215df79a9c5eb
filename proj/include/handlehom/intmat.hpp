#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hh {

/// Arbitrary-precision integer. SNF intermediates can exceed machine words,
/// so everything exact runs on these.
using Int = mpz_class;

/// Dense exact-integer matrix, row-major. Values are immutable in spirit:
/// every operation returns a new matrix.
class IntMat {
 public:
  IntMat() = default;
  IntMat(std::size_t rows, std::size_t cols);

  static IntMat identity(std::size_t n);
  static IntMat from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Int& at(std::size_t i, std::size_t j) const;
  Int& at(std::size_t i, std::size_t j);

  bool is_zero() const;
  bool operator==(const IntMat& other) const = default;

  IntMat transposed() const;
  IntMat negated() const;
  /// col(dst) += c * col(src)
  IntMat add_scaled_col(std::size_t src, std::size_t dst, const Int& c) const;
  /// row(dst) += c * row(src)
  IntMat add_scaled_row(std::size_t src, std::size_t dst, const Int& c) const;
  IntMat delete_row(std::size_t i) const;
  IntMat delete_col(std::size_t j) const;
  IntMat negate_row(std::size_t i) const;
  IntMat negate_col(std::size_t j) const;
  /// Entries reduced to {0,1}.
  IntMat reduced_mod2() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;

  void check_row(std::size_t i) const;
  void check_col(std::size_t j) const;
};

IntMat matmul(const IntMat& a, const IntMat& b);

/// Smith normal form: diagonal of invariant factors d_1 | d_2 | ... | d_r,
/// all positive. With transforms, row_ops * a * col_ops is the diagonal
/// matrix and both transforms are unimodular.
struct SnfResult {
  std::vector<Int> diagonal;
  std::size_t rank = 0;
  std::optional<IntMat> row_ops;
  std::optional<IntMat> col_ops;
};

SnfResult snf(const IntMat& a, bool with_transforms = false);

/// Rank over the two-element field.
std::size_t rank_mod2(const IntMat& a);

}  // namespace hh
