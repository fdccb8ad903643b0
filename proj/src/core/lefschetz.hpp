#ifndef MONO_CORE_LEFSCHETZ_HPP
#define MONO_CORE_LEFSCHETZ_HPP

#include <string>
#include <vector>

#include "core/contexts.hpp"
#include "core/factorization.hpp"
#include "core/mcg.hpp"
#include "core/search.hpp"

namespace mono {

enum class BaseKind { Disk, Sphere };

// A Dehn-twist factor of a Lefschetz factorization: the twist about the
// transported curve, conjugator^-1 x_1^{orientation} conjugator. The
// orientation bit is carried explicitly; positivity of a twist is
// geometric data the word model cannot infer.
struct TwistFactor {
  McgWord conjugator;
  int orientation = +1;

  friend bool operator==(const TwistFactor&, const TwistFactor&) = default;
};

// Monodromy data of a genus-g Lefschetz fibration over a disk or sphere.
// Equality of two fibrations as data is equality of (genus, base, factor
// sequence); geometric equivalence is only ever asserted through
// kas_equivalent certificates.
class LefschetzFibration {
public:
  LefschetzFibration(int genus, BaseKind base, std::vector<TwistFactor> factors, McgWord boundary);

  int genus() const { return genus_; }
  BaseKind base() const { return base_; }
  const std::vector<TwistFactor>& factors() const { return factors_; }
  // Boundary monodromy phi; the identity word for a sphere base.
  const McgWord& boundary() const { return boundary_; }

  McgWord factor_value(std::size_t i) const;
  Factorization<McgGroupContext> value_factorization() const;

  friend bool operator==(const LefschetzFibration&, const LefschetzFibration&) = default;

private:
  int genus_;
  BaseKind base_;
  std::vector<TwistFactor> factors_;
  McgWord boundary_;
};

struct FibrationCheck {
  std::string representation;  // "symplectic", "puncture-permutation"
  bool passed = false;
  std::string detail;
};

struct FibrationReport {
  std::vector<FibrationCheck> checks;
  bool all_passed() const;
};

// Necessary-conditions report: in every available quotient representation
// the factor product must equal the boundary monodromy (disk) or the
// identity (sphere). Passing is never a proof of equality in Map_g^h.
FibrationReport validate(const LefschetzFibration& f);

// True iff every factor is a positively oriented Dehn twist, the
// criterion for the total space to carry a symplectic structure.
bool is_symplectic_type(const LefschetzFibration& f);

// Fiber sum: factors of f1 followed by the psi-conjugated factors of f2;
// over a disk the boundary becomes phi1 psi^-1 phi2 psi.
LefschetzFibration fiber_sum(const LefschetzFibration& f1, const LefschetzFibration& f2,
                             const McgWord& psi);

// Kas criterion: equivalence of fibrations is equivalence of their twist
// factorizations under Hurwitz moves and simultaneous conjugation, with
// conjugators restricted to a finite generator list. An empty list means
// the distinct factor values of f1 (the subgroup generated by the twists
// appearing in the first factorization).
EquivalenceVerdict kas_equivalent(const LefschetzFibration& f1, const LefschetzFibration& f2,
                                  const SearchOptions& options, std::vector<McgWord> conjugators = {});

}  // namespace mono

#endif
