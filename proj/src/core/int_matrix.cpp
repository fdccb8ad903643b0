#include "core/int_matrix.hpp"

#include "core/error.hpp"

namespace mono {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::multiply(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail_invalid("matrix dimension mismatch");
  IntMatrix r(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::int64_t aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_negated_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? -1 : 0)) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ' ';
      s += std::to_string(at(i, j));
    }
    s += ']';
  }
  s += ']';
  return s;
}

IntMatrix symplectic_form(int g) {
  IntMatrix j(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j.at(2 * i, 2 * i + 1) = 1;
    j.at(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

std::int64_t symplectic_pair(const IntMatrix& j, const std::vector<std::int64_t>& x,
                             const std::vector<std::int64_t>& y) {
  const int n = j.rows();
  std::int64_t s = 0;
  for (int r = 0; r < n; ++r) {
    if (x[static_cast<std::size_t>(r)] == 0) continue;
    std::int64_t row = 0;
    for (int c = 0; c < n; ++c) row += j.at(r, c) * y[static_cast<std::size_t>(c)];
    s += x[static_cast<std::size_t>(r)] * row;
  }
  return s;
}

IntMatrix transvection(const IntMatrix& j, const std::vector<std::int64_t>& v, int sign) {
  const int n = j.rows();
  // jv = J v
  std::vector<std::int64_t> jv(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) jv[static_cast<std::size_t>(r)] += j.at(r, c) * v[static_cast<std::size_t>(c)];
  IntMatrix m = IntMatrix::identity(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m.at(r, c) += static_cast<std::int64_t>(sign) * v[static_cast<std::size_t>(r)] * jv[static_cast<std::size_t>(c)];
  return m;
}

}  // namespace mono
