#ifndef MONO_CORE_MCG_HPP
#define MONO_CORE_MCG_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/braid.hpp"
#include "core/free_group.hpp"
#include "core/int_matrix.hpp"
#include "core/permutation.hpp"

namespace mono {

// Word in the hyperelliptic mapping class group Map_g^h, over the Dehn
// twist generators x_1..x_{2g+1} and the central involution H. H letters
// commute with everything and satisfy H^2 = 1, so words are stored with
// an H parity flag (canonically front-loaded) plus a freely reduced
// twist-letter sequence. This is a storage normal form, not a solution
// to the word problem: equality of group elements is only ever asserted
// through quotient representations.
class McgWord {
public:
  McgWord() = default;
  explicit McgWord(int genus);
  // letters: signed twist indices; h_count: number of H letters.
  McgWord(int genus, std::span<const Letter> letters, int h_count = 0);

  static McgWord twist_generator(int genus, int index, int sign = +1);
  static McgWord involution(int genus);  // H

  int genus() const { return genus_; }
  int twist_generator_count() const { return 2 * genus_ + 1; }
  bool has_h() const { return h_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_empty_word() const { return letters_.empty() && !h_; }
  std::size_t length() const { return letters_.size() + (h_ ? 1u : 0u); }

  // Sum of twist-letter exponents; invariant under the stored reductions.
  std::int64_t exponent_sum() const;

  McgWord multiply(const McgWord& rhs) const;
  McgWord inverse() const;
  McgWord conjugate_by(const McgWord& b) const;

  // Word-level comparison of the stored normal form.
  friend bool operator==(const McgWord&, const McgWord&) = default;
  friend std::strong_ordering operator<=>(const McgWord&, const McgWord&) = default;

private:
  int genus_ = 1;
  bool h_ = false;
  std::vector<Letter> letters_;
};

// Homology classes of the standard chain of 2g+1 curves on a genus-g
// surface, with the standard symplectic Gram matrix. Consecutive curves
// pair to +-1, distant curves to 0, and together they span Z^{2g}.
class ChainCurves {
public:
  explicit ChainCurves(int genus);

  int genus() const { return genus_; }
  const IntMatrix& form() const { return form_; }
  const std::vector<std::int64_t>& curve(int index) const;  // 1..2g+1

  // Exact Gram-pattern check; used by tests and the relator report.
  bool gram_pattern_ok() const;

private:
  int genus_;
  IntMatrix form_;
  std::vector<std::vector<std::int64_t>> curves_;
};

// Letterwise lift B_{2g+2} -> Map_g^h, s_j |-> x_j (the canonical lift, no H).
McgWord lift_braid(const BraidWord& b, int genus);

// Integer symplectic representation on H_1(surface) = Z^{2g}: x_i acts as
// the transvection along the i-th chain curve, H as -Identity. The image
// of a word is the left-to-right product of its letter matrices.
IntMatrix symplectic_rep(const McgWord& w, const ChainCurves& chain);
IntMatrix symplectic_rep(const McgWord& w);  // standard chain for w's genus

// Quotient Map_g^h -> Map_{0,2g+2} -> S_{2g+2}: x_i |-> (i, i+1), H |-> id.
Permutation puncture_permutation(const McgWord& w);

// Coxeter element of a chain of twist generators:
// (x_{i1})(x_{i2} x_{i1}) ... (x_{in} ... x_{i1}); length n(n+1)/2.
McgWord coxeter_element(int genus, std::span<const int> chain_indices);

// One relator evaluation in one representation.
struct RelatorCheck {
  std::string presentation;    // "braid", "map0", "mcg_h"
  std::string relator;         // short human-readable label
  std::string representation;  // "artin-action", "puncture-permutation", "symplectic"
  std::string result;          // "identity", "-identity", "non-identity", "equal", "unequal"
  bool as_expected = false;
};

struct RelatorReport {
  int genus = 0;
  std::vector<RelatorCheck> checks;
  bool all_expected() const;
};

// Evaluates the defining relators of B_{2g+2}, Map_{0,2g+2} and Map_g^h in
// every available representation, recording what each evaluates to and
// whether that matches the presentation (identity in genuine quotients,
// provably non-identity for the quotient-only relators under the faithful
// Artin action).
RelatorReport verify_presentation_relators(int genus);

}  // namespace mono

#endif
