#include "handlehom/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "handlehom/errors.hpp"

namespace hh {

IntMat::IntMat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c)
      throw ShapeError("ragged row list in matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

void IntMat::check_row(std::size_t i) const {
  if (i >= rows_)
    throw IndexOutOfRangeError("row index " + std::to_string(i) +
                               " out of range for " + std::to_string(rows_) +
                               " rows");
}

void IntMat::check_col(std::size_t j) const {
  if (j >= cols_)
    throw IndexOutOfRangeError("column index " + std::to_string(j) +
                               " out of range for " + std::to_string(cols_) +
                               " columns");
}

const Int& IntMat::at(std::size_t i, std::size_t j) const {
  check_row(i);
  check_col(j);
  return data_[i * cols_ + j];
}

Int& IntMat::at(std::size_t i, std::size_t j) {
  check_row(i);
  check_col(j);
  return data_[i * cols_ + j];
}

bool IntMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Int& v) { return v == 0; });
}

IntMat IntMat::transposed() const {
  IntMat m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntMat IntMat::negated() const {
  IntMat m = *this;
  for (Int& v : m.data_) v = -v;
  return m;
}

IntMat IntMat::add_scaled_col(std::size_t src, std::size_t dst,
                              const Int& c) const {
  check_col(src);
  check_col(dst);
  IntMat m = *this;
  for (std::size_t i = 0; i < rows_; ++i) m.at(i, dst) += c * at(i, src);
  return m;
}

IntMat IntMat::add_scaled_row(std::size_t src, std::size_t dst,
                              const Int& c) const {
  check_row(src);
  check_row(dst);
  IntMat m = *this;
  for (std::size_t j = 0; j < cols_; ++j) m.at(dst, j) += c * at(src, j);
  return m;
}

IntMat IntMat::delete_row(std::size_t i) const {
  check_row(i);
  IntMat m(rows_ - 1, cols_);
  for (std::size_t r = 0, t = 0; r < rows_; ++r) {
    if (r == i) continue;
    for (std::size_t j = 0; j < cols_; ++j) m.at(t, j) = at(r, j);
    ++t;
  }
  return m;
}

IntMat IntMat::delete_col(std::size_t j) const {
  check_col(j);
  IntMat m(rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t c = 0, t = 0; c < cols_; ++c) {
      if (c == j) continue;
      m.at(i, t++) = at(i, c);
    }
  return m;
}

IntMat IntMat::negate_row(std::size_t i) const {
  check_row(i);
  IntMat m = *this;
  for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = -at(i, j);
  return m;
}

IntMat IntMat::negate_col(std::size_t j) const {
  check_col(j);
  IntMat m = *this;
  for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = -at(i, j);
  return m;
}

IntMat IntMat::reduced_mod2() const {
  IntMat m = *this;
  for (Int& v : m.data_) v = ((v % 2) + 2) % 2;
  return m;
}

std::string IntMat::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      out << (j ? " " : "") << at(i, j).get_str();
  }
  out << "]";
  return out.str();
}

IntMat matmul(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows())
    throw ShapeError("matmul shape mismatch: " + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()));
  IntMat m(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& v = a.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(i, j) += v * b.at(k, j);
    }
  return m;
}

namespace {

struct SnfState {
  IntMat a;
  bool track;
  IntMat u;  // accumulated row ops
  IntMat v;  // accumulated col ops

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    if (track)
      for (std::size_t c = 0; c < u.cols(); ++c)
        std::swap(u.at(i, c), u.at(j, c));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    if (track)
      for (std::size_t r = 0; r < v.rows(); ++r)
        std::swap(v.at(r, i), v.at(r, j));
  }

  // row(dst) += c * row(src)
  void row_op(std::size_t src, std::size_t dst, const Int& c) {
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(dst, j) += c * a.at(src, j);
    if (track)
      for (std::size_t j = 0; j < u.cols(); ++j)
        u.at(dst, j) += c * u.at(src, j);
  }

  // col(dst) += c * col(src)
  void col_op(std::size_t src, std::size_t dst, const Int& c) {
    for (std::size_t i = 0; i < a.rows(); ++i) a.at(i, dst) += c * a.at(i, src);
    if (track)
      for (std::size_t i = 0; i < v.rows(); ++i)
        v.at(i, dst) += c * v.at(i, src);
  }

  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) = -a.at(i, j);
    if (track)
      for (std::size_t j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
  }
};

// Minimal-|value| nonzero entry in the block with corner (t,t);
// ties broken by lowest row, then lowest column.
bool find_pivot(const IntMat& a, std::size_t t, std::size_t& pi,
                std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& v = a.at(i, j);
      if (v == 0) continue;
      Int av = abs(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult snf(const IntMat& a, bool with_transforms) {
  SnfState s{a, with_transforms, IntMat::identity(a.rows()),
             IntMat::identity(a.cols())};
  const std::size_t n = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi, pj;
    if (!find_pivot(s.a, t, pi, pj)) break;
    s.swap_rows(t, pi);
    s.swap_cols(t, pj);

    for (;;) {
      // Clear the pivot column and row. Truncated division leaves
      // remainders strictly smaller than the pivot, so re-picking the
      // minimal entry terminates.
      bool dirty = false;
      for (std::size_t i = t + 1; i < s.a.rows(); ++i) {
        if (s.a.at(i, t) == 0) continue;
        Int q = s.a.at(i, t) / s.a.at(t, t);  // truncated
        if (q != 0) s.row_op(t, i, -q);
        if (s.a.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < s.a.cols(); ++j) {
        if (s.a.at(t, j) == 0) continue;
        Int q = s.a.at(t, j) / s.a.at(t, t);
        if (q != 0) s.col_op(t, j, -q);
        if (s.a.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t qi, qj;
        find_pivot(s.a, t, qi, qj);
        s.swap_rows(t, qi);
        s.swap_cols(t, qj);
        continue;
      }
      // Pivot must divide every entry of the remaining block or the
      // divisibility chain can fail; pull a bad row in and redo.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < s.a.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < s.a.cols(); ++j)
          if (s.a.at(i, j) % s.a.at(t, t) != 0) {
            s.row_op(i, t, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (s.a.at(t, t) < 0) s.negate_row(t);
  }

  SnfResult result;
  for (std::size_t t = 0; t < n; ++t) {
    if (s.a.at(t, t) == 0) break;
    result.diagonal.push_back(s.a.at(t, t));
  }
  result.rank = result.diagonal.size();
  if (with_transforms) {
    result.row_ops = std::move(s.u);
    result.col_ops = std::move(s.v);
  }
  return result;
}

std::size_t rank_mod2(const IntMat& a) {
  const std::size_t words = (a.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(a.rows(),
                                               std::vector<std::uint64_t>(words));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (mpz_odd_p(a.at(i, j).get_mpz_t()))
        rows[i][j / 64] ^= (std::uint64_t{1} << (j % 64));

  std::size_t rank = 0;
  for (std::size_t j = 0; j < a.cols() && rank < a.rows(); ++j) {
    const std::size_t w = j / 64;
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    std::size_t pivot = rank;
    while (pivot < a.rows() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == a.rows()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != rank && (rows[i][w] & bit))
        for (std::size_t k = 0; k < words; ++k) rows[i][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

}  // namespace hh
