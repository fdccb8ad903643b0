#ifndef MONO_CORE_CONTEXTS_HPP
#define MONO_CORE_CONTEXTS_HPP

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/braid.hpp"
#include "core/error.hpp"
#include "core/free_group.hpp"
#include "core/mcg.hpp"
#include "core/permutation.hpp"
#include "core/text_io.hpp"

namespace mono {

// A group context packages the arithmetic a factorization needs: identity,
// multiplication, inversion, a canonical key, and a conjugation-stable
// class key usable as an inequivalence witness. `exact_equality` says
// whether key equality decides equality of group elements (true for the
// faithful representations; false for raw mapping-class-group words,
// whose keys are word-level and whose class keys live in quotients).
template <class G>
concept GroupContextType = requires(const G& ctx, const typename G::Element& a, const typename G::Element& b,
                                    std::string_view text) {
  { ctx.identity() } -> std::same_as<typename G::Element>;
  { ctx.multiply(a, b) } -> std::same_as<typename G::Element>;
  { ctx.invert(a) } -> std::same_as<typename G::Element>;
  { ctx.key(a) } -> std::convertible_to<std::string>;
  { ctx.class_key(a) } -> std::convertible_to<std::string>;
  { ctx.parse(text) } -> std::same_as<typename G::Element>;
  { ctx.format(a) } -> std::convertible_to<std::string>;
  { ctx.name() } -> std::convertible_to<std::string>;
  { G::exact_equality } -> std::convertible_to<bool>;
};

class SymmetricGroup {
public:
  using Element = Permutation;
  static constexpr bool exact_equality = true;

  explicit SymmetricGroup(int degree) : degree_(degree) {
    if (degree < 1) fail_invalid("symmetric group degree must be >= 1");
  }

  int degree() const { return degree_; }
  std::string name() const { return "symmetric:" + std::to_string(degree_); }

  Element identity() const { return Permutation::identity(degree_); }
  Element multiply(const Element& a, const Element& b) const { return a.compose(b); }
  Element invert(const Element& a) const { return a.inverse(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string key(const Element& a) const { return a.one_line(); }
  // Cycle type: the conjugacy class of a permutation.
  std::string class_key(const Element& a) const;

  Element parse(std::string_view text) const { return parse_permutation(text, degree_); }
  std::string format(const Element& a) const { return format_permutation(a); }

  // Adjacent transpositions; conjugation by them generates all of S_n.
  std::vector<Element> default_conjugators() const;
  static constexpr bool has_default_conjugators = true;

private:
  int degree_;
};

class BraidGroupContext {
public:
  using Element = BraidWord;
  static constexpr bool exact_equality = true;  // keys go through the faithful Artin action

  explicit BraidGroupContext(int strands) : strands_(strands) {
    if (strands < 2) fail_invalid("braid group needs at least 2 strands");
  }

  int strands() const { return strands_; }
  std::string name() const { return "braid:" + std::to_string(strands_); }

  Element identity() const { return BraidWord(strands_); }
  Element multiply(const Element& a, const Element& b) const { return a.multiply(b); }
  Element invert(const Element& a) const { return a.inverse(); }
  bool equal(const Element& a, const Element& b) const { return braid_equals(a, b); }

  // Canonical key: the tuple of reduced Artin-action images.
  std::string key(const Element& a) const;
  // Exponent sum plus permutation cycle type; both conjugation-invariant.
  std::string class_key(const Element& a) const;
  // Image in the abelianization B_n -> Z (every s_i |-> 1).
  std::vector<std::int64_t> abelianized_vector(const Element& a) const;

  Element parse(std::string_view text) const { return parse_braid_word(text, strands_); }
  std::string format(const Element& a) const { return format_braid_word(a); }

  static constexpr bool has_default_conjugators = false;
  std::vector<Element> default_conjugators() const {
    fail_unsupported("simultaneous conjugation over " + name() +
                     " needs an explicit conjugator generator list (infinite group)");
  }

private:
  int strands_;
};

class FreeGroupContext {
public:
  using Element = FreeWord;
  static constexpr bool exact_equality = true;

  explicit FreeGroupContext(int rank) : rank_(rank) {
    if (rank < 0) fail_invalid("free group rank must be >= 0");
  }

  int rank() const { return rank_; }
  std::string name() const { return "free:" + std::to_string(rank_); }

  Element identity() const { return FreeWord(); }
  Element multiply(const Element& a, const Element& b) const { return a.multiply(b); }
  Element invert(const Element& a) const { return a.inverse(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string key(const Element& a) const { return format_free_word(a); }
  // Abelianized exponent vector; conjugation acts trivially on it.
  std::string class_key(const Element& a) const;
  std::vector<std::int64_t> abelianized_vector(const Element& a) const;

  Element parse(std::string_view text) const;
  std::string format(const Element& a) const { return format_free_word(a); }

  static constexpr bool has_default_conjugators = false;
  std::vector<Element> default_conjugators() const {
    fail_unsupported("simultaneous conjugation over " + name() +
                     " needs an explicit conjugator generator list (infinite group)");
  }

private:
  int rank_;
};

// Words in Map_g^h. Keys are the stored word normal form (reduced letters,
// H parity): finer than group equality, so orbit exhaustion over this
// context never proves group-level inequivalence. Class keys are computed
// in the symplectic and puncture-permutation quotients plus the
// abelianization of Map_g^h, so they are honest group invariants.
class McgGroupContext {
public:
  using Element = McgWord;
  static constexpr bool exact_equality = false;

  explicit McgGroupContext(int genus) : genus_(genus), chain_(genus) {}

  int genus() const { return genus_; }
  std::string name() const { return "mcg:" + std::to_string(genus_); }

  Element identity() const { return McgWord(genus_); }
  Element multiply(const Element& a, const Element& b) const { return a.multiply(b); }
  Element invert(const Element& a) const { return a.inverse(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }  // word-level

  std::string key(const Element& a) const;
  std::string class_key(const Element& a) const;

  // Exponent sum in the abelianization Z/((2g+1) gcd(4, 2g+2)) of Map_g^h.
  std::int64_t abelianized(const Element& a) const;
  std::vector<std::int64_t> abelianized_vector(const Element& a) const { return {abelianized(a)}; }

  Element parse(std::string_view text) const { return parse_mcg_word(text, genus_); }
  std::string format(const Element& a) const { return format_mcg_word(a); }

  const ChainCurves& chain() const { return chain_; }

  static constexpr bool has_default_conjugators = false;
  std::vector<Element> default_conjugators() const {
    fail_unsupported("simultaneous conjugation over " + name() +
                     " needs an explicit conjugator generator list (infinite group)");
  }

private:
  int genus_;
  ChainCurves chain_;
};

static_assert(GroupContextType<SymmetricGroup>);
static_assert(GroupContextType<BraidGroupContext>);
static_assert(GroupContextType<FreeGroupContext>);
static_assert(GroupContextType<McgGroupContext>);

}  // namespace mono

#endif
