#ifndef TLAB_SIMPLEX_HPP
#define TLAB_SIMPLEX_HPP

#include <cstddef>
#include <vector>

#include "tlab/errors.hpp"

namespace tlab::lp {

enum class Status { optimal, unbounded };

template <class Field> struct Solution {
  Status status = Status::optimal;
  Field objective{};
  std::vector<Field> x;
  std::size_t pivots = 0;
};

/// Dense tableau simplex for
///
///     maximize c.x  subject to  A x <= b,  x >= 0,
///
/// with b >= 0, so the slack basis at the origin is feasible and no phase
/// one is needed. Field must be an exact ordered field; entering and leaving
/// variables follow Bland's rule, which rules out cycling.
template <class Field>
Solution<Field> maximize(const std::vector<std::vector<Field>> &a, const std::vector<Field> &b,
                         const std::vector<Field> &c) {
  const std::size_t m = b.size();
  const std::size_t n = c.size();
  if (a.size() != m)
    throw InvalidInput("constraint matrix and right-hand side disagree in length");
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n)
      throw InvalidInput("constraint row has the wrong width");
    if (b[i] < Field(0))
      throw InvalidInput("right-hand side must be non-negative");
  }

  // Columns 0..n-1 structural, n..n+m-1 slack, n+m the right-hand side.
  const std::size_t cols = n + m + 1;
  const std::size_t rhs = n + m;
  std::vector<std::vector<Field>> t(m, std::vector<Field>(cols, Field(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = a[i][j];
    t[i][n + i] = Field(1);
    t[i][rhs] = b[i];
    basis[i] = n + i;
  }
  // Reduced-cost row: z_j < 0 means column j improves the objective.
  std::vector<Field> z(cols, Field(0));
  for (std::size_t j = 0; j < n; ++j)
    z[j] = -c[j];

  Solution<Field> sol;
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (z[j] < Field(0)) {
        enter = j;
        break;
      }
    }
    if (enter == cols)
      break;

    std::size_t leave = m;
    Field best_ratio{};
    for (std::size_t i = 0; i < m; ++i) {
      if (!(t[i][enter] > Field(0)))
        continue;
      const Field ratio = t[i][rhs] / t[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      sol.status = Status::unbounded;
      return sol;
    }

    auto &prow = t[leave];
    const Field piv = prow[enter];
    for (std::size_t j = 0; j < cols; ++j)
      if (prow[j] != Field(0))
        prow[j] = prow[j] / piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == Field(0))
        continue;
      const Field factor = t[i][enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (prow[j] != Field(0))
          t[i][j] = t[i][j] - factor * prow[j];
    }
    if (z[enter] != Field(0)) {
      const Field factor = z[enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (prow[j] != Field(0))
          z[j] = z[j] - factor * prow[j];
    }
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.objective = z[rhs];
  sol.x.assign(n, Field(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n)
      sol.x[basis[i]] = t[i][rhs];
  return sol;
}

} // namespace tlab::lp

#endif // TLAB_SIMPLEX_HPP
