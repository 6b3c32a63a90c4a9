#include "weilcomb/intlattice.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace weilcomb {

namespace {

using Matrix = std::vector<std::vector<Coeff>>;  // column-major: mat[c][r]

void axpy_column(Matrix& mat, std::size_t src, std::size_t dst, Coeff factor) {
  auto& s = mat[src];
  auto& d = mat[dst];
  for (std::size_t r = 0; r < d.size(); ++r) {
    d[r] = checked::add(d[r], checked::mul(factor, s[r]));
  }
}

void negate_column(Matrix& mat, std::size_t col) {
  for (Coeff& v : mat[col]) v = checked::neg(v);
}

}  // namespace

IntegerSolveResult solve_integer_combination(const Matrix& columns,
                                             const std::vector<Coeff>& target) {
  const std::size_t rows = target.size();
  const std::size_t m = columns.size();
  for (const auto& col : columns) {
    if (col.size() != rows) {
      throw std::invalid_argument("basis column dimension does not match target dimension");
    }
  }

  // Working copy A and the unimodular transform U with A = B * U maintained
  // throughout: every column operation is applied to both.
  Matrix a = columns;
  Matrix u(m, std::vector<Coeff>(m, 0));
  for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;

  // Column echelon form: pivots[p] = (row, col); columns >= next free slot
  // are zero in all rows above the current one.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t first_free = 0;
  for (std::size_t r = 0; r < rows && first_free < m; ++r) {
    // Reduce until at most one active column is nonzero in row r.
    for (;;) {
      std::size_t best = m;
      for (std::size_t c = first_free; c < m; ++c) {
        if (a[c][r] != 0 && (best == m || std::llabs(a[c][r]) < std::llabs(a[best][r]))) {
          best = c;
        }
      }
      if (best == m) break;  // row r is zero on all active columns
      bool reduced_any = false;
      for (std::size_t c = first_free; c < m; ++c) {
        if (c == best || a[c][r] == 0) continue;
        const Coeff q = a[c][r] / a[best][r];  // truncated division shrinks |a[c][r]|
        if (q != 0) {
          axpy_column(a, best, c, checked::neg(q));
          axpy_column(u, best, c, checked::neg(q));
        }
        if (a[c][r] != 0) reduced_any = true;  // remainder left; another round needed
      }
      if (!reduced_any) {
        // Single nonzero column in this row: make it the pivot.
        std::swap(a[best], a[first_free]);
        std::swap(u[best], u[first_free]);
        if (a[first_free][r] < 0) {
          negate_column(a, first_free);
          negate_column(u, first_free);
        }
        pivots.emplace_back(r, first_free);
        ++first_free;
        break;
      }
    }
  }

  // Back-substitution against the echelon columns.
  std::vector<Coeff> residual = target;
  std::vector<Coeff> y(m, 0);
  IntegerSolveResult result;
  for (const auto& [r, c] : pivots) {
    const Coeff pivot = a[c][r];
    if (residual[r] % pivot != 0) {
      result.obstruction = LatticeObstruction{r, pivot, residual[r] % pivot};
      return result;
    }
    const Coeff coeff = residual[r] / pivot;
    y[c] = coeff;
    if (coeff != 0) {
      for (std::size_t row = 0; row < rows; ++row) {
        residual[row] = checked::sub(residual[row], checked::mul(coeff, a[c][row]));
      }
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (residual[r] != 0) {
      result.obstruction = LatticeObstruction{r, 0, residual[r]};
      return result;
    }
  }

  // Solution in original coordinates: x = U * y.
  result.solvable = true;
  result.solution.assign(m, 0);
  for (std::size_t c = 0; c < m; ++c) {
    if (y[c] == 0) continue;
    for (std::size_t i = 0; i < m; ++i) {
      result.solution[i] = checked::add(result.solution[i], checked::mul(u[c][i], y[c]));
    }
  }
  return result;
}

}  // namespace weilcomb
