#include "core/lefschetz.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/text_io.hpp"

namespace mono {

LefschetzFibration::LefschetzFibration(int genus, BaseKind base, std::vector<TwistFactor> factors,
                                       McgWord boundary)
    : genus_(genus), base_(base), factors_(std::move(factors)), boundary_(std::move(boundary)) {
  if (genus < 1) fail_invalid("fibration genus must be >= 1");
  if (boundary_.genus() != genus) fail_mismatch("boundary word genus differs");
  if (base_ == BaseKind::Sphere && !boundary_.is_empty_word())
    fail_invalid("a sphere-base fibration has trivial boundary monodromy");
  for (const auto& f : factors_) {
    if (f.conjugator.genus() != genus) fail_mismatch("factor conjugator genus differs");
    if (f.orientation != 1 && f.orientation != -1) fail_invalid("factor orientation must be +1 or -1");
  }
}

McgWord LefschetzFibration::factor_value(std::size_t i) const {
  const TwistFactor& f = factors_.at(i);
  return McgWord::twist_generator(genus_, 1, f.orientation).conjugate_by(f.conjugator);
}

Factorization<McgGroupContext> LefschetzFibration::value_factorization() const {
  std::vector<McgWord> values;
  values.reserve(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) values.push_back(factor_value(i));
  return Factorization<McgGroupContext>(McgGroupContext(genus_), std::move(values));
}

bool FibrationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const FibrationCheck& c) { return c.passed; });
}

FibrationReport validate(const LefschetzFibration& f) {
  FibrationReport report;
  const McgWord product = f.value_factorization().product();
  const McgWord& target = f.boundary();

  const ChainCurves chain(f.genus());
  IntMatrix got = symplectic_rep(product, chain);
  IntMatrix want = symplectic_rep(target, chain);
  report.checks.push_back({"symplectic", got == want,
                           got == want ? "product image " + got.to_string()
                                       : "product image " + got.to_string() + " != boundary image " +
                                             want.to_string()});

  Permutation pgot = puncture_permutation(product);
  Permutation pwant = puncture_permutation(target);
  report.checks.push_back({"puncture-permutation", pgot == pwant,
                           pgot == pwant ? "product image " + pgot.cycles()
                                         : "product image " + pgot.cycles() + " != boundary image " +
                                               pwant.cycles()});
  return report;
}

bool is_symplectic_type(const LefschetzFibration& f) {
  return std::all_of(f.factors().begin(), f.factors().end(),
                     [](const TwistFactor& t) { return t.orientation == +1; });
}

LefschetzFibration fiber_sum(const LefschetzFibration& f1, const LefschetzFibration& f2,
                             const McgWord& psi) {
  if (f1.genus() != f2.genus()) fail_mismatch("fiber sum needs equal fiber genus");
  if (f1.base() != f2.base()) fail_mismatch("fiber sum needs equal base kinds");
  if (psi.genus() != f1.genus()) fail_mismatch("gluing word genus differs");

  std::vector<TwistFactor> factors = f1.factors();
  for (const TwistFactor& t : f2.factors())
    // (w^-1 x_1^s w)_psi = (w psi)^-1 x_1^s (w psi): conjugators compose.
    factors.push_back({t.conjugator.multiply(psi), t.orientation});

  McgWord boundary(f1.genus());
  if (f1.base() == BaseKind::Disk)
    boundary = f1.boundary().multiply(psi.inverse()).multiply(f2.boundary()).multiply(psi);
  return LefschetzFibration(f1.genus(), f1.base(), std::move(factors), std::move(boundary));
}

EquivalenceVerdict kas_equivalent(const LefschetzFibration& f1, const LefschetzFibration& f2,
                                  const SearchOptions& options, std::vector<McgWord> conjugators) {
  if (f1.genus() != f2.genus()) fail_mismatch("kas equivalence needs equal fiber genus");
  if (f1.base() != f2.base()) fail_mismatch("kas equivalence needs equal base kinds");

  SearchOptions opts = options;
  opts.allow_conjugation = true;
  if (conjugators.empty()) {
    // The twists appearing in the first factorization generate the
    // subgroup the gluing class may be drawn from.
    std::vector<std::string> seen;
    for (std::size_t i = 0; i < f1.factors().size(); ++i) {
      McgWord value = f1.factor_value(i);
      std::string key = format_mcg_word(value);
      if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
        seen.push_back(key);
        conjugators.push_back(std::move(value));
      }
    }
  }
  if (conjugators.empty()) opts.allow_conjugation = false;
  return hurwitz_equivalent(f1.value_factorization(), f2.value_factorization(), opts, conjugators);
}

}  // namespace mono
