#include "core/mcg.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace mono {

McgWord::McgWord(int genus) : genus_(genus) {
  if (genus < 1) fail_invalid("mapping class group words need genus >= 1");
}

McgWord::McgWord(int genus, std::span<const Letter> letters, int h_count) : McgWord(genus) {
  for (Letter x : letters) {
    int i = letter_index(x);
    if (i < 1 || i > 2 * genus + 1)
      fail_invalid("generator x" + std::to_string(i) + " out of range for genus " + std::to_string(genus));
  }
  letters_ = FreeWord::reduce(letters).letters();
  h_ = (h_count % 2) != 0;
}

McgWord McgWord::twist_generator(int genus, int index, int sign) {
  Letter x = sign < 0 ? -index : index;
  return McgWord(genus, std::span<const Letter>(&x, 1));
}

McgWord McgWord::involution(int genus) { return McgWord(genus, {}, 1); }

std::int64_t McgWord::exponent_sum() const {
  std::int64_t s = 0;
  for (Letter x : letters_) s += letter_sign(x);
  return s;
}

McgWord McgWord::multiply(const McgWord& rhs) const {
  if (genus_ != rhs.genus_) fail_mismatch("genus differs");
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return McgWord(genus_, cat, (h_ ? 1 : 0) + (rhs.h_ ? 1 : 0));
}

McgWord McgWord::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) rev.push_back(-*it);
  return McgWord(genus_, rev, h_ ? 1 : 0);
}

McgWord McgWord::conjugate_by(const McgWord& b) const {
  return b.inverse().multiply(*this).multiply(b);
}

ChainCurves::ChainCurves(int genus) : genus_(genus), form_(symplectic_form(genus)) {
  if (genus < 1) fail_invalid("chain curves need genus >= 1");
  // Basis a_i = e_{2i-1}, b_i = e_{2i}. Chain:
  //   v_1 = a_1, v_{2i} = b_i, v_{2i+1} = a_i + a_{i+1}, v_{2g+1} = a_g.
  const int n = 2 * genus;
  auto vec = [n](std::initializer_list<std::pair<int, std::int64_t>> entries) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    for (auto [idx, val] : entries) v[static_cast<std::size_t>(idx)] = val;
    return v;
  };
  curves_.push_back(vec({{0, 1}}));  // a_1
  for (int i = 1; i <= genus; ++i) {
    curves_.push_back(vec({{2 * i - 1, 1}}));  // b_i
    if (i < genus)
      curves_.push_back(vec({{2 * i - 2, 1}, {2 * i, 1}}));  // a_i + a_{i+1}
  }
  curves_.push_back(vec({{2 * genus - 2, 1}}));  // a_g
}

const std::vector<std::int64_t>& ChainCurves::curve(int index) const {
  if (index < 1 || index > 2 * genus_ + 1) fail_invalid("chain curve index out of range");
  return curves_[static_cast<std::size_t>(index - 1)];
}

bool ChainCurves::gram_pattern_ok() const {
  const int m = 2 * genus_ + 1;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      std::int64_t p = symplectic_pair(form_, curve(i), curve(j));
      if (j == i + 1 ? (p != 1 && p != -1) : (p != 0)) return false;
    }
  return true;
}

McgWord lift_braid(const BraidWord& b, int genus) {
  if (b.strand_count() != 2 * genus + 2)
    fail_mismatch("braid on " + std::to_string(b.strand_count()) + " strands does not lift to genus " +
                  std::to_string(genus));
  return McgWord(genus, b.letters());
}

IntMatrix symplectic_rep(const McgWord& w, const ChainCurves& chain) {
  if (chain.genus() != w.genus()) fail_mismatch("chain genus differs from word genus");
  IntMatrix m = IntMatrix::identity(2 * w.genus());
  if (w.has_h()) m = m.negated();
  for (Letter x : w.letters())
    m = m.multiply(transvection(chain.form(), chain.curve(letter_index(x)), letter_sign(x)));
  return m;
}

IntMatrix symplectic_rep(const McgWord& w) { return symplectic_rep(w, ChainCurves(w.genus())); }

Permutation puncture_permutation(const McgWord& w) {
  const int pts = 2 * w.genus() + 2;
  Permutation p = Permutation::identity(pts);
  for (Letter x : w.letters()) {
    int i = letter_index(x);
    p = p.compose(Permutation::transposition(pts, i, i + 1));
  }
  return p;
}

McgWord coxeter_element(int genus, std::span<const int> chain_indices) {
  if (chain_indices.empty()) fail_invalid("coxeter element of an empty chain");
  std::vector<Letter> letters;
  const std::size_t n = chain_indices.size();
  letters.reserve(n * (n + 1) / 2);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t down = k + 1; down-- > 0;) {
      int idx = chain_indices[down];
      if (idx < 1 || idx > 2 * genus + 1) fail_invalid("chain index out of range");
      letters.push_back(idx);
    }
  return McgWord(genus, letters);
}

namespace {

// x_1 ... x_{2g+1} x_{2g+1} ... x_1 as braid letters in B_{2g+2}.
std::vector<Letter> chain_relator_letters(int genus) {
  std::vector<Letter> v;
  for (int i = 1; i <= 2 * genus + 1; ++i) v.push_back(i);
  for (int i = 2 * genus + 1; i >= 1; --i) v.push_back(i);
  return v;
}

// (x_1 ... x_{2g+1})^{2g+2}
std::vector<Letter> long_relator_letters(int genus) {
  std::vector<Letter> v;
  for (int rep = 0; rep < 2 * genus + 2; ++rep)
    for (int i = 1; i <= 2 * genus + 1; ++i) v.push_back(i);
  return v;
}

}  // namespace

bool RelatorReport::all_expected() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelatorCheck& c) { return c.as_expected; });
}

RelatorReport verify_presentation_relators(int genus) {
  if (genus < 1 || genus > 4) fail_invalid("relator report supports genus 1..4");
  RelatorReport report;
  report.genus = genus;
  const int strands = 2 * genus + 2;
  const ChainCurves chain(genus);

  auto braid_word = [&](std::span<const Letter> ls) { return BraidWord(strands, ls); };
  auto mcg_word = [&](std::span<const Letter> ls) { return McgWord(genus, ls); };

  auto check_braid_pair = [&](const std::string& pres, const std::string& label, const BraidWord& lhs,
                              const BraidWord& rhs) {
    bool eq = braid_equals(lhs, rhs);
    report.checks.push_back({pres, label, "artin-action", eq ? "equal" : "unequal", eq});
  };
  auto check_quotient_pair = [&](const std::string& pres, const std::string& label, const McgWord& lhs,
                                 const McgWord& rhs) {
    bool sym = symplectic_rep(lhs, chain) == symplectic_rep(rhs, chain);
    bool perm = puncture_permutation(lhs) == puncture_permutation(rhs);
    report.checks.push_back({pres, label, "symplectic", sym ? "equal" : "unequal", sym});
    report.checks.push_back({pres, label, "puncture-permutation", perm ? "equal" : "unequal", perm});
  };

  // Artin relations of B_{2g+2}: hold on the nose in every representation.
  for (int i = 1; i + 1 <= strands - 1; ++i) {
    std::vector<Letter> lhs{i, i + 1, i}, rhs{i + 1, i, i + 1};
    std::string label = "s" + std::to_string(i) + " s" + std::to_string(i + 1) + " s" + std::to_string(i) +
                        " = s" + std::to_string(i + 1) + " s" + std::to_string(i) + " s" + std::to_string(i + 1);
    check_braid_pair("braid", label, braid_word(lhs), braid_word(rhs));
    check_quotient_pair("braid", label, mcg_word(lhs), mcg_word(rhs));
  }
  for (int i = 1; i <= strands - 1; ++i)
    for (int j = i + 2; j <= strands - 1; ++j) {
      std::vector<Letter> lhs{i, j}, rhs{j, i};
      std::string label = "s" + std::to_string(i) + " s" + std::to_string(j) + " = s" + std::to_string(j) +
                          " s" + std::to_string(i);
      check_braid_pair("braid", label, braid_word(lhs), braid_word(rhs));
      check_quotient_pair("braid", label, mcg_word(lhs), mcg_word(rhs));
    }

  // Extra relators of Map_{0,2g+2}. They are NOT relations of B_{2g+2}
  // itself, which the faithful Artin action must confirm.
  const auto chain_rel = chain_relator_letters(genus);
  const auto long_rel = long_relator_letters(genus);
  {
    bool artin_trivial = braid_equals(braid_word(chain_rel), BraidWord(strands));
    report.checks.push_back({"map0", "s1..s(2g+1) s(2g+1)..s1", "artin-action",
                             artin_trivial ? "identity" : "non-identity", !artin_trivial});
    artin_trivial = braid_equals(braid_word(long_rel), BraidWord(strands));
    report.checks.push_back({"map0", "(s1..s(2g+1))^(2g+2)", "artin-action",
                             artin_trivial ? "identity" : "non-identity", !artin_trivial});

    Permutation p = puncture_permutation(mcg_word(chain_rel));
    report.checks.push_back({"map0", "s1..s(2g+1) s(2g+1)..s1", "puncture-permutation",
                             p.is_identity() ? "identity" : "non-identity", p.is_identity()});
    p = puncture_permutation(mcg_word(long_rel));
    report.checks.push_back({"map0", "(s1..s(2g+1))^(2g+2)", "puncture-permutation",
                             p.is_identity() ? "identity" : "non-identity", p.is_identity()});
  }

  // Map_g^h relators in the quotient representations.
  {
    // x_1..x_{2g+1} x_{2g+1}..x_1 = H: the canonical lift of the chain
    // relator equals the hyperelliptic involution, -Identity on homology.
    IntMatrix m = symplectic_rep(mcg_word(chain_rel), chain);
    report.checks.push_back({"mcg_h", "x1..x(2g+1) x(2g+1)..x1 = H", "symplectic",
                             m.is_negated_identity() ? "-identity"
                             : m.is_identity()       ? "identity"
                                                     : "non-identity",
                             m.is_negated_identity()});
    Permutation p = puncture_permutation(mcg_word(chain_rel));
    report.checks.push_back({"mcg_h", "x1..x(2g+1) x(2g+1)..x1 = H", "puncture-permutation",
                             p.is_identity() ? "identity" : "non-identity", p.is_identity()});

    McgWord h2 = McgWord::involution(genus).multiply(McgWord::involution(genus));
    m = symplectic_rep(h2, chain);
    report.checks.push_back(
        {"mcg_h", "H^2 = 1", "symplectic", m.is_identity() ? "identity" : "non-identity", m.is_identity()});

    m = symplectic_rep(mcg_word(long_rel), chain);
    report.checks.push_back({"mcg_h", "(x1..x(2g+1))^(2g+2) = 1", "symplectic",
                             m.is_identity() ? "identity" : "non-identity", m.is_identity()});
    p = puncture_permutation(mcg_word(long_rel));
    report.checks.push_back({"mcg_h", "(x1..x(2g+1))^(2g+2) = 1", "puncture-permutation",
                             p.is_identity() ? "identity" : "non-identity", p.is_identity()});

    // H central: H x_i H^-1 = x_i.
    for (int i = 1; i <= 2 * genus + 1; ++i) {
      McgWord xi = McgWord::twist_generator(genus, i);
      McgWord conj = xi.conjugate_by(McgWord::involution(genus));
      bool sym = symplectic_rep(conj, chain) == symplectic_rep(xi, chain);
      report.checks.push_back({"mcg_h", "H x" + std::to_string(i) + " = x" + std::to_string(i) + " H",
                               "symplectic", sym ? "equal" : "unequal", sym});
    }
  }

  return report;
}

}  // namespace mono
