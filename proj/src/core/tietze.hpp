#ifndef MONO_CORE_TIETZE_HPP
#define MONO_CORE_TIETZE_HPP

#include <cstdint>

#include "core/free_group.hpp"

namespace mono {

// Presentation simplification by sound moves only: free and cyclic
// reduction of relators, removal of duplicates (up to rotation and
// inversion), and elimination of a generator that some short relator
// defines. The output presents an isomorphic group and is deterministic
// for a given budget. `budget` caps the number of eliminations;
// `max_definition_length` refuses substitutions that would splice in
// words longer than this (length balance).
GroupPresentation tietze_simplify(const GroupPresentation& p, std::uint64_t budget = 64,
                                  std::size_t max_definition_length = 16);

}  // namespace mono

#endif
