#ifndef MONO_CORE_INT_MATRIX_HPP
#define MONO_CORE_INT_MATRIX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mono {

// Small dense square integer matrix; enough linear algebra for the
// symplectic representations (exact int64 arithmetic, desk-scale words).
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::int64_t at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix multiply(const IntMatrix& rhs) const;
  IntMatrix transpose() const;
  IntMatrix negated() const;
  std::int64_t trace() const;
  bool is_identity() const;
  bool is_negated_identity() const;

  std::string to_string() const;  // "[[1 0][0 1]]"

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

// Standard symplectic Gram matrix on Z^{2g}: <e_{2i-1}, e_{2i}> = 1.
IntMatrix symplectic_form(int g);

// x^T J y for column vectors.
std::int64_t symplectic_pair(const IntMatrix& j, const std::vector<std::int64_t>& x,
                             const std::vector<std::int64_t>& y);

// Transvection x |-> x + sign * <x, v> v as a matrix (I + sign * v (Jv)^T).
IntMatrix transvection(const IntMatrix& j, const std::vector<std::int64_t>& v, int sign);

}  // namespace mono

#endif
