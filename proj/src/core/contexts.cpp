#include "core/contexts.hpp"

#include <numeric>

namespace mono {

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

std::string SymmetricGroup::class_key(const Element& a) const { return "cycles:" + join_ints(a.cycle_type()); }

std::vector<SymmetricGroup::Element> SymmetricGroup::default_conjugators() const {
  std::vector<Element> gens;
  for (int i = 1; i < degree_; ++i) gens.push_back(Permutation::transposition(degree_, i, i + 1));
  return gens;
}

std::string BraidGroupContext::key(const Element& a) const {
  BraidAction act = artin_action(a);
  std::string s;
  for (int j = 1; j <= strands_; ++j) {
    if (j > 1) s += ';';
    s += format_free_word(act.image(j));
  }
  return s;
}

std::string BraidGroupContext::class_key(const Element& a) const {
  std::int64_t exp = 0;
  for (Letter x : a.letters()) exp += letter_sign(x);
  return "exp:" + std::to_string(exp) + ";perm:" + join_ints(braid_permutation(a).cycle_type());
}

std::vector<std::int64_t> BraidGroupContext::abelianized_vector(const Element& a) const {
  std::int64_t exp = 0;
  for (Letter x : a.letters()) exp += letter_sign(x);
  return {exp};
}

std::vector<std::int64_t> FreeGroupContext::abelianized_vector(const Element& a) const {
  std::vector<std::int64_t> exp(static_cast<std::size_t>(rank_), 0);
  for (Letter x : a.letters()) exp[static_cast<std::size_t>(letter_index(x) - 1)] += letter_sign(x);
  return exp;
}

std::string FreeGroupContext::class_key(const Element& a) const {
  auto exp = abelianized_vector(a);
  std::string s = "ab:";
  for (std::size_t i = 0; i < exp.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exp[i]);
  }
  return s;
}

FreeGroupContext::Element FreeGroupContext::parse(std::string_view text) const {
  FreeWord w = parse_free_word(text);
  if (w.max_generator() > rank_)
    fail_parse("word uses generator g" + std::to_string(w.max_generator()) + " beyond rank " +
               std::to_string(rank_));
  return w;
}

std::string McgGroupContext::key(const Element& a) const {
  std::string s = a.has_h() ? "h:1;" : "h:0;";
  s += "x:";
  for (std::size_t i = 0; i < a.letters().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(a.letters()[i]);
  }
  return s;
}

std::int64_t McgGroupContext::abelianized(const Element& a) const {
  const std::int64_t modulus = static_cast<std::int64_t>(2 * genus_ + 1) * std::gcd(4, 2 * genus_ + 2);
  std::int64_t v = a.exponent_sum() + (a.has_h() ? (4 * genus_ + 2) : 0);
  v %= modulus;
  if (v < 0) v += modulus;
  return v;
}

std::string McgGroupContext::class_key(const Element& a) const {
  IntMatrix m = symplectic_rep(a, chain_);
  return "ab:" + std::to_string(abelianized(a)) + ";perm:" + join_ints(puncture_permutation(a).cycle_type()) +
         ";tr:" + std::to_string(m.trace()) + ";tr2:" + std::to_string(m.multiply(m).trace());
}

}  // namespace mono
