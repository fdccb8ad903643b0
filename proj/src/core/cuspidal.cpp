#include "core/cuspidal.hpp"

#include "core/error.hpp"

namespace mono {

CuspidalFactorization::CuspidalFactorization(int strand_count, std::vector<CuspidalFactor> factors)
    : strands_(strand_count), factors_(std::move(factors)) {
  if (strand_count < 2) fail_invalid("cuspidal factorization needs at least 2 strands");
  for (const auto& f : factors_) {
    if (f.exponent < 1 || f.exponent > 3)
      fail_invalid("cuspidal exponent must be 1, 2 or 3; got " + std::to_string(f.exponent));
    if (f.conjugator.strand_count() != strand_count) fail_mismatch("conjugator strand count differs");
  }
}

BraidWord CuspidalFactorization::factor_value(std::size_t i) const {
  const CuspidalFactor& f = factors_.at(i);
  BraidWord core = BraidWord::generator(strands_, 1);
  BraidWord power(strands_);
  for (int k = 0; k < f.exponent; ++k) power = power.multiply(core);
  return power.conjugate_by(f.conjugator);
}

Factorization<BraidGroupContext> CuspidalFactorization::as_braid_factorization() const {
  std::vector<BraidWord> values;
  values.reserve(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) values.push_back(factor_value(i));
  return Factorization<BraidGroupContext>(BraidGroupContext(strands_), std::move(values));
}

Factorization<BraidGroupContext> regenerate(const CuspidalFactorization& cf) {
  std::vector<BraidWord> values;
  const BraidWord half = BraidWord::generator(cf.strand_count(), 1);
  for (const auto& f : cf.factors()) {
    BraidWord twist = half.conjugate_by(f.conjugator);
    for (int k = 0; k < f.exponent; ++k) values.push_back(twist);
  }
  return Factorization<BraidGroupContext>(BraidGroupContext(cf.strand_count()), std::move(values));
}

}  // namespace mono
