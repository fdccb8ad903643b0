#ifndef MONO_CORE_FACTORIZATION_HPP
#define MONO_CORE_FACTORIZATION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "core/contexts.hpp"
#include "core/error.hpp"

namespace mono {

// Ordered tuple of group elements together with its left-to-right product.
// Immutable; every move returns a fresh value.
template <GroupContextType G>
class Factorization {
public:
  using Element = typename G::Element;

  Factorization(G context, std::vector<Element> factors)
      : context_(std::move(context)), factors_(std::move(factors)), product_(compute_product()) {}

  const G& context() const { return context_; }
  const std::vector<Element>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  const Element& product() const { return product_; }

  // Canonical key: factor keys joined by '|' (empty tuple: "|").
  std::string key() const {
    if (factors_.empty()) return "|";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += '|';
      s += context_.key(factors_[i]);
    }
    return s;
  }

  // Elementary Hurwitz move at position i (1-based, i <= size-1):
  //   forward: (g_i, g_{i+1}) -> (g_{i+1}, g_{i+1}^-1 g_i g_{i+1})
  //   inverse: (g_i, g_{i+1}) -> (g_i g_{i+1} g_i^-1, g_i)
  // The product is unchanged; inverse undoes forward.
  Factorization hurwitz_move(int i, bool forward) const {
    if (i < 1 || static_cast<std::size_t>(i) >= factors_.size())
      fail_invalid("hurwitz move position " + std::to_string(i) + " out of range for length " +
                   std::to_string(factors_.size()));
    std::vector<Element> fs = factors_;
    const std::size_t a = static_cast<std::size_t>(i - 1), b = a + 1;
    if (forward) {
      Element moved = context_.multiply(context_.multiply(context_.invert(fs[b]), fs[a]), fs[b]);
      fs[a] = factors_[b];
      fs[b] = std::move(moved);
    } else {
      Element moved = context_.multiply(context_.multiply(fs[a], fs[b]), context_.invert(fs[a]));
      fs[b] = factors_[a];
      fs[a] = std::move(moved);
    }
    return Factorization(context_, std::move(fs));
  }

  // Conjugates every factor by b; the product becomes b^-1 (product) b.
  Factorization simultaneous_conjugate(const Element& b) const {
    const Element binv = context_.invert(b);
    std::vector<Element> fs;
    fs.reserve(factors_.size());
    for (const Element& g : factors_) fs.push_back(context_.multiply(context_.multiply(binv, g), b));
    return Factorization(context_, std::move(fs));
  }

  // Cyclic rotation: +1 moves the first factor to the back. Changes the
  // product by conjugation; only meaningful as an optional move.
  Factorization rotated(int direction) const {
    if (factors_.size() < 2) return *this;
    std::vector<Element> fs = factors_;
    if (direction >= 0)
      std::rotate(fs.begin(), fs.begin() + 1, fs.end());
    else
      std::rotate(fs.begin(), fs.end() - 1, fs.end());
    return Factorization(context_, std::move(fs));
  }

private:
  Element compute_product() const {
    Element p = context_.identity();
    for (const Element& g : factors_) p = context_.multiply(p, g);
    return p;
  }

  G context_;
  std::vector<Element> factors_;
  Element product_;
};

// Concatenation of f1 with f2 conjugated by psi; the product is
// product(f1) * psi^-1 product(f2) psi.
template <GroupContextType G>
Factorization<G> compose_conjugated(const Factorization<G>& f1, const Factorization<G>& f2,
                                    const typename G::Element& psi) {
  if (f1.context().name() != f2.context().name())
    fail_mismatch("cannot compose factorizations over " + f1.context().name() + " and " +
                  f2.context().name());
  Factorization<G> conj = f2.simultaneous_conjugate(psi);
  std::vector<typename G::Element> fs = f1.factors();
  fs.insert(fs.end(), conj.factors().begin(), conj.factors().end());
  return Factorization<G>(f1.context(), std::move(fs));
}

// Named invariants of a factorization, rendered as stable strings.
// Modes: "length", "product-key" (Hurwitz-stable only), "product-class",
// "class-multiset", "abelianized" (conjugation-stable). Unknown modes and
// modes the context cannot support raise Unsupported.
template <GroupContextType G>
std::map<std::string, std::string> invariants(const Factorization<G>& f,
                                              const std::vector<std::string>& modes) {
  std::map<std::string, std::string> out;
  for (const std::string& mode : modes) {
    if (mode == "length") {
      out[mode] = std::to_string(f.size());
    } else if (mode == "product-key") {
      out[mode] = f.context().key(f.product());
    } else if (mode == "product-class") {
      out[mode] = f.context().class_key(f.product());
    } else if (mode == "class-multiset") {
      std::vector<std::string> keys;
      keys.reserve(f.size());
      for (const auto& g : f.factors()) keys.push_back(f.context().class_key(g));
      std::sort(keys.begin(), keys.end());
      std::string s;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        if (i) s += " / ";
        s += keys[i];
      }
      out[mode] = s;
    } else if (mode == "abelianized") {
      if constexpr (requires(const G& ctx, const typename G::Element& e) { ctx.abelianized_vector(e); }) {
        auto v = f.context().abelianized_vector(f.product());
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) s += ',';
          s += std::to_string(v[i]);
        }
        out[mode] = s + "]";
      } else {
        fail_unsupported("abelianized invariant is not available over " + f.context().name());
      }
    } else {
      fail_unsupported("unknown invariant mode `" + mode + "`");
    }
  }
  return out;
}

}  // namespace mono

#endif
