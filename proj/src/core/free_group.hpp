#ifndef MONO_CORE_FREE_GROUP_HPP
#define MONO_CORE_FREE_GROUP_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mono {

// A letter of a word in a finitely generated group: +k is the k-th
// generator, -k its inverse. Generator indices are 1-based throughout.
using Letter = std::int32_t;

inline Letter inverse_letter(Letter x) { return -x; }
inline int letter_index(Letter x) { return x < 0 ? -x : x; }
inline int letter_sign(Letter x) { return x < 0 ? -1 : +1; }

// Freely reduced word in a free group. The empty word is the identity.
// Values are immutable after construction and safe to share across threads.
class FreeWord {
public:
  FreeWord() = default;

  // Reduces an arbitrary letter sequence. Reduction is a single stack
  // pass; the result is the unique normal form.
  static FreeWord reduce(std::span<const Letter> raw);
  static FreeWord generator(int index, int sign = +1);

  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  // Largest generator index occurring in the word (0 for the identity).
  int max_generator() const;

  FreeWord multiply(const FreeWord& rhs) const;
  FreeWord inverse() const;
  // b^{-1} * this * b
  FreeWord conjugate_by(const FreeWord& b) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend std::strong_ordering operator<=>(const FreeWord&, const FreeWord&) = default;

private:
  std::vector<Letter> letters_;
};

// Substitutes images[i-1] for generator i (inverted images for inverse
// letters) and reduces. images must cover every generator used by w.
FreeWord apply_endomorphism(std::span<const FreeWord> images, const FreeWord& w);

// Finite presentation: `generator_count` generators, relators as reduced
// words over them. Data only; no word-problem machinery.
struct GroupPresentation {
  int generator_count = 0;
  std::vector<FreeWord> relators;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

// <g_1,...,g_k | g_1 g_2 ... g_k>, the fundamental group of a k-punctured sphere.
GroupPresentation punctured_sphere_presentation(int k);

// <a_1,b_1,...,a_g,b_g | prod [a_i,b_i]>, a closed orientable genus-g surface.
// Generator 2i-1 is a_i, generator 2i is b_i.
GroupPresentation surface_presentation(int g);

}  // namespace mono

#endif
