#ifndef MONO_CORE_SMITH_HPP
#define MONO_CORE_SMITH_HPP

#include <gmpxx.h>

#include <vector>

namespace mono {

// Dense integer matrix with arbitrary-precision entries; entries can grow
// during elimination, so the arithmetic stays exact.
using BigMatrix = std::vector<std::vector<mpz_class>>;

// Smith normal form diagonal of m (nonnegative, each dividing the next),
// computed by exact unimodular row/column operations. Only the diagonal is
// returned; the transforms are not tracked.
std::vector<mpz_class> smith_diagonal(BigMatrix m);

// Invariant factors of the abelian group Z^cols / rowspace(m): the
// nontrivial Smith diagonal entries (> 1) followed by one 0 per free rank.
std::vector<mpz_class> abelian_invariants(const BigMatrix& m, std::size_t cols);

}  // namespace mono

#endif
