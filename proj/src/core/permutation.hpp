#ifndef MONO_CORE_PERMUTATION_HPP
#define MONO_CORE_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace mono {

// Permutation of {1..n}, stored in one-line form (0-based internally).
// Composition is left to right: (a * b)(x) = b(a(x)).
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(int degree);

  static Permutation identity(int degree) { return Permutation(degree); }
  static Permutation transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(image_.size()); }
  // 1-based application.
  int apply(int point) const;

  Permutation compose(const Permutation& then) const;
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation& b) const;
  bool is_identity() const;

  // "[2 1 3]": one-line images of 1..n. Canonical key.
  std::string one_line() const;
  // Disjoint cycle form, fixed points omitted; identity renders as "e".
  std::string cycles() const;
  // Cycle lengths, descending, fixed points included. Conjugacy invariant.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> image_;  // image_[i] = image of point i, 0-based
};

}  // namespace mono

#endif
