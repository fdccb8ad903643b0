#ifndef MONO_CORE_CUSPIDAL_HPP
#define MONO_CORE_CUSPIDAL_HPP

#include <vector>

#include "core/braid.hpp"
#include "core/contexts.hpp"
#include "core/factorization.hpp"

namespace mono {

// Factor of a cuspidal braid-monodromy factorization: a conjugated power
// w^-1 s_1^e w with e = 1 (tangent line), 2 (node) or 3 (cusp). Factors
// are stored as (conjugator, exponent) pairs; raw braid words are not
// accepted because recognizing a conjugated power would need a conjugacy
// solver.
struct CuspidalFactor {
  BraidWord conjugator;
  int exponent = 1;
};

class CuspidalFactorization {
public:
  CuspidalFactorization(int strand_count, std::vector<CuspidalFactor> factors);

  int strand_count() const { return strands_; }
  const std::vector<CuspidalFactor>& factors() const { return factors_; }

  // The braid value w^-1 s_1^e w of one factor.
  BraidWord factor_value(std::size_t i) const;
  // All factor values as a braid factorization (no regeneration).
  Factorization<BraidGroupContext> as_braid_factorization() const;

private:
  int strands_;
  std::vector<CuspidalFactor> factors_;
};

// Regeneration: each (w, e) becomes e consecutive copies of the half
// twist w^-1 s_1 w, modeling the smoothing of the branch curve. The
// resulting length is the exponent sum and the product is unchanged.
Factorization<BraidGroupContext> regenerate(const CuspidalFactorization& cf);

}  // namespace mono

#endif
