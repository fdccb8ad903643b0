#ifndef MONO_CORE_BRAID_HPP
#define MONO_CORE_BRAID_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "core/free_group.hpp"
#include "core/permutation.hpp"

namespace mono {

// Word in the Artin generators s_1..s_{n-1} of the braid group B_n.
// Letters are stored freely reduced (adjacent s_i s_i^-1 cancelled); this
// is a storage normalization only, not a canonical form. Exact equality
// goes through the action on the free group, which is faithful.
class BraidWord {
public:
  BraidWord() = default;
  explicit BraidWord(int strand_count);
  BraidWord(int strand_count, std::span<const Letter> letters);

  static BraidWord generator(int strand_count, int index, int sign = +1);

  int strand_count() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_empty_word() const { return letters_.empty(); }

  BraidWord multiply(const BraidWord& rhs) const;
  BraidWord inverse() const;
  // b^{-1} * this * b
  BraidWord conjugate_by(const BraidWord& b) const;

  // Word-level comparison (letters), not group equality.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend std::strong_ordering operator<=>(const BraidWord&, const BraidWord&) = default;

private:
  int strands_ = 2;
  std::vector<Letter> letters_;
};

// Action of a braid on the free group F_n = <g_1..g_n>, stored as the
// images of the generators. Images produced by braid words are always
// conjugates of generators, and the product g_1...g_n is fixed.
class BraidAction {
public:
  static BraidAction identity(int n);

  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<FreeWord>& images() const { return images_; }
  const FreeWord& image(int generator) const;

  FreeWord apply(const FreeWord& w) const;

  // Action of this followed by `then` (letters act left to right).
  BraidAction and_then(const BraidAction& then) const;

  friend bool operator==(const BraidAction&, const BraidAction&) = default;

private:
  explicit BraidAction(std::vector<FreeWord> images) : images_(std::move(images)) {}
  BraidAction() = default;
  friend BraidAction artin_action(const BraidWord&);

  std::vector<FreeWord> images_;
};

// Hurwitz/Artin action of a braid word: the generator s_i sends
//   g_i |-> g_{i+1},  g_{i+1} |-> g_{i+1}^-1 g_i g_{i+1},  g_j |-> g_j otherwise;
// inverse letters apply the inverse substitution. Letters act left to right.
BraidAction artin_action(const BraidWord& b);

// Applies the Artin action of b directly to one word (cheaper than
// materializing the full action when only one image is needed).
FreeWord artin_apply(const BraidWord& b, const FreeWord& w);

// Exact group equality via the faithful action.
bool braid_equals(const BraidWord& a, const BraidWord& b);

// Projection B_n -> S_n, s_i |-> (i, i+1).
Permutation braid_permutation(const BraidWord& b);

// The full twist (s_{n-1} ... s_1)^n generating the center of B_n; length n(n-1).
BraidWord full_twist(int n);

}  // namespace mono

#endif
