#ifndef MONO_CORE_TEXT_IO_HPP
#define MONO_CORE_TEXT_IO_HPP

#include <string>
#include <string_view>

#include "core/braid.hpp"
#include "core/free_group.hpp"
#include "core/mcg.hpp"
#include "core/permutation.hpp"

namespace mono {

// Word syntaxes, shared by the CLI and all file formats:
//   free words   g1 g2^-1          (identity: empty string or "e")
//   braid words  s1 s2^-1          optional header "braid n=<n>:"
//   mcg words    x1 x2^-1 H        optional header "mcg g=<g>:"
//   permutations (1 2)(3 4)        cycles, 1-based; identity "e"
// Tokens may carry an integer exponent (s1^3 = s1 s1 s1). Parse errors
// name the offending token.

FreeWord parse_free_word(std::string_view text);
std::string format_free_word(const FreeWord& w);

// If the text has a "braid n=..:" header the strand count must match.
BraidWord parse_braid_word(std::string_view text, int strand_count);
std::string format_braid_word(const BraidWord& b, bool with_header = false);

McgWord parse_mcg_word(std::string_view text, int genus);
std::string format_mcg_word(const McgWord& w, bool with_header = false);

Permutation parse_permutation(std::string_view text, int degree);
// Canonical display form is the cycle form; keys use one_line().
std::string format_permutation(const Permutation& p);

}  // namespace mono

#endif
