#ifndef MONO_CORE_HOM_COUNT_HPP
#define MONO_CORE_HOM_COUNT_HPP

#include <cstdint>

#include "core/free_group.hpp"

namespace mono {

// Exact number of homomorphisms from the presented group into the
// symmetric group S_k, by exhaustive assignment of generator images with
// backtracking on partially checkable relators. k <= 6.
std::uint64_t count_homomorphisms(const GroupPresentation& p, int k, int threads = 1);

}  // namespace mono

#endif
