// Shared test helpers: an independent gcd-of-minors oracle for Smith normal
// form and a rejection sampler for random valid decompositions. Nothing here
// calls the SNF under test.
#pragma once

#include <random>
#include <vector>

#include "handlehom/decomposition.hpp"
#include "handlehom/intmat.hpp"

namespace testsupport {

using hh::Int;
using hh::IntMat;

// Cofactor expansion; fine for the <= 6x6 matrices the oracle sees.
inline Int det(const IntMat& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMat minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, t = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, t++) = m.at(i, c);
      }
    Int term = m.at(0, j) * det(minor);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

inline void combinations(std::size_t n, std::size_t k,
                         std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Invariant factors as gcd_k(minors) / gcd_{k-1}(minors).
inline std::vector<Int> snf_oracle(const IntMat& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<Int> minor_gcds;  // g_1, g_2, ...
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    combinations(a.rows(), k, row_sets);
    combinations(a.cols(), k, col_sets);
    Int g = 0;
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets) {
        IntMat sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            sub.at(i, j) = a.at(rs[i], cs[j]);
        g = gcd(g, det(sub));
      }
    if (g == 0) break;
    minor_gcds.push_back(g);
  }
  std::vector<Int> factors;
  Int prev = 1;
  for (const Int& g : minor_gcds) {
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

// Random decomposition with the acceptance-suite shape bounds, rejection
// sampled until the raw boundary composition vanishes.
inline hh::HandleDecomposition random_valid_decomposition(
    std::mt19937_64& rng, int max_dim = 4, int max_handles = 5,
    long max_entry = 3) {
  for (;;) {
    int n = 1 + static_cast<int>(rng() % max_dim);
    hh::HandleDecomposition d = hh::HandleDecomposition::empty(n);
    for (int k = 0; k <= n; ++k) {
      int count = static_cast<int>(rng() % (max_handles + 1));
      for (int i = 0; i < count; ++i)
        d.handles[k].push_back("g" + std::to_string(k) + "_" +
                               std::to_string(i));
    }
    for (int k = 1; k <= n; ++k) {
      IntMat m(d.handles[k - 1].size(), d.handles[k].size());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (rng() % 4 == 0) {
            long v = 1 + static_cast<long>(rng() % max_entry);
            m.at(i, j) = (rng() % 2 == 0) ? v : -v;
          }
      d.boundary_data(k) = std::move(m);
    }
    bool flat = true;
    for (int k = 1; k + 1 <= n && flat; ++k)
      flat = matmul(d.boundary_data(k), d.boundary_data(k + 1)).is_zero();
    if (flat) return d;
  }
}

// First unit pivot (degree, k-label, km1-label), if any.
struct UnitPivot {
  int degree;
  std::string k_handle;
  std::string km1_handle;
};

inline std::vector<UnitPivot> unit_pivots(const hh::HandleDecomposition& d) {
  std::vector<UnitPivot> out;
  for (int k = 1; k <= d.dimension; ++k) {
    const IntMat& m = d.boundary_data(k);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j) == 1 || m.at(i, j) == -1)
          out.push_back({k, d.handles[k][j], d.handles[k - 1][i]});
  }
  return out;
}

}  // namespace testsupport
