#include "core/smith.hpp"

#include <algorithm>
#include <cstdlib>

namespace mono {

namespace {

struct MinEntry {
  std::size_t row = 0, col = 0;
  bool found = false;
};

MinEntry min_nonzero(const BigMatrix& m, std::size_t from) {
  MinEntry best;
  mpz_class best_abs;
  for (std::size_t r = from; r < m.size(); ++r)
    for (std::size_t c = from; c < m[r].size(); ++c) {
      if (m[r][c] == 0) continue;
      mpz_class a = abs(m[r][c]);
      if (!best.found || a < best_abs) {
        best = {r, c, true};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

std::vector<mpz_class> smith_diagonal(BigMatrix m) {
  std::vector<mpz_class> diag;
  if (m.empty() || m[0].empty()) return diag;
  const std::size_t rows = m.size(), cols = m[0].size();
  const std::size_t steps = std::min(rows, cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      MinEntry pivot = min_nonzero(m, t);
      if (!pivot.found) return diag;  // rest of the matrix is zero
      std::swap(m[t], m[pivot.row]);
      if (pivot.col != t)
        for (auto& row : m) std::swap(row[t], row[pivot.col]);

      // Reduce column and row by the pivot.
      bool disturbed = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        mpz_class q = m[r][t] / m[t][t];  // truncated division keeps remainders small
        if (q != 0)
          for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) disturbed = true;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        mpz_class q = m[t][c] / m[t][t];
        if (q != 0)
          for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) disturbed = true;
      }
      if (disturbed) continue;  // smaller remainders exist; pick a new pivot

      // Pivot must divide every remaining entry; if not, fold the offender
      // into the pivot row and restart this step.
      bool divides_all = true;
      for (std::size_t r = t + 1; r < rows && divides_all; ++r)
        for (std::size_t c = t + 1; c < cols && divides_all; ++c)
          if (m[r][c] % m[t][t] != 0) {
            for (std::size_t cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (m[t][t] < 0) m[t][t] = -m[t][t];
    diag.push_back(m[t][t]);
  }
  return diag;
}

std::vector<mpz_class> abelian_invariants(const BigMatrix& m, std::size_t cols) {
  std::vector<mpz_class> diag = smith_diagonal(m);
  std::vector<mpz_class> out;
  std::size_t rank = 0;
  for (const mpz_class& d : diag)
    if (d != 0) {
      ++rank;
      if (d > 1) out.push_back(d);
    }
  for (std::size_t i = rank; i < cols; ++i) out.push_back(0);
  return out;
}

}  // namespace mono
