#include "core/braid.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace mono {

namespace {

void check_strands(int n) {
  if (n < 2) fail_invalid("braid group needs at least 2 strands");
}

// Applies the substitution of one Artin letter to a reduced word, with
// on-the-fly cancellation.
FreeWord apply_artin_letter(Letter s, const FreeWord& w) {
  const int i = letter_index(s);
  std::vector<Letter> out;
  out.reserve(w.length() + 2);
  auto push = [&out](Letter x) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  };
  auto push_run = [&push](std::initializer_list<Letter> xs) {
    for (Letter x : xs) push(x);
  };
  for (Letter g : w.letters()) {
    const int j = letter_index(g);
    const bool inv = g < 0;
    if (s > 0) {
      // g_i -> g_{i+1},  g_{i+1} -> g_{i+1}^-1 g_i g_{i+1}
      if (j == i)
        push(inv ? -(i + 1) : (i + 1));
      else if (j == i + 1) {
        if (!inv)
          push_run({-(i + 1), i, i + 1});
        else
          push_run({-(i + 1), -i, i + 1});
      } else
        push(g);
    } else {
      // s_i^-1: g_i -> g_i g_{i+1} g_i^-1,  g_{i+1} -> g_i
      if (j == i) {
        if (!inv)
          push_run({i, i + 1, -i});
        else
          push_run({i, -(i + 1), -i});
      } else if (j == i + 1)
        push(inv ? -i : i);
      else
        push(g);
    }
  }
  return FreeWord::reduce(out);
}

}  // namespace

BraidWord::BraidWord(int strand_count) : strands_(strand_count) { check_strands(strand_count); }

BraidWord::BraidWord(int strand_count, std::span<const Letter> letters) : strands_(strand_count) {
  check_strands(strand_count);
  for (Letter x : letters) {
    int i = letter_index(x);
    if (i < 1 || i >= strand_count)
      fail_invalid("generator s" + std::to_string(i) + " out of range in B_" + std::to_string(strand_count));
  }
  letters_ = FreeWord::reduce(letters).letters();
}

BraidWord BraidWord::generator(int strand_count, int index, int sign) {
  Letter x = sign < 0 ? -index : index;
  return BraidWord(strand_count, std::span<const Letter>(&x, 1));
}

BraidWord BraidWord::multiply(const BraidWord& rhs) const {
  if (strands_ != rhs.strands_) fail_mismatch("strand counts differ");
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return BraidWord(strands_, cat);
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) rev.push_back(-*it);
  return BraidWord(strands_, rev);
}

BraidWord BraidWord::conjugate_by(const BraidWord& b) const {
  return b.inverse().multiply(*this).multiply(b);
}

BraidAction BraidAction::identity(int n) {
  BraidAction a;
  a.images_.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) a.images_.push_back(FreeWord::generator(i));
  return a;
}

const FreeWord& BraidAction::image(int generator) const {
  if (generator < 1 || generator > rank()) fail_invalid("generator index out of range");
  return images_[static_cast<std::size_t>(generator - 1)];
}

FreeWord BraidAction::apply(const FreeWord& w) const { return apply_endomorphism(images_, w); }

BraidAction BraidAction::and_then(const BraidAction& then) const {
  BraidAction r;
  r.images_.reserve(images_.size());
  for (const FreeWord& img : images_) r.images_.push_back(then.apply(img));
  return r;
}

BraidAction artin_action(const BraidWord& b) {
  // After consuming a prefix p, images hold p(g_j); the next letter acts
  // on each image by substitution.
  std::vector<FreeWord> images = BraidAction::identity(b.strand_count()).images();
  for (Letter s : b.letters())
    for (FreeWord& img : images) img = apply_artin_letter(s, img);
  return BraidAction(std::move(images));
}

FreeWord artin_apply(const BraidWord& b, const FreeWord& w) {
  FreeWord r = w;
  for (Letter s : b.letters()) r = apply_artin_letter(s, r);
  return r;
}

bool braid_equals(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count() != b.strand_count()) fail_mismatch("strand counts differ");
  if (a.letters() == b.letters()) return true;
  return artin_action(a) == artin_action(b);
}

Permutation braid_permutation(const BraidWord& b) {
  Permutation p = Permutation::identity(b.strand_count());
  for (Letter s : b.letters()) {
    int i = letter_index(s);
    p = p.compose(Permutation::transposition(b.strand_count(), i, i + 1));
  }
  return p;
}

BraidWord full_twist(int n) {
  check_strands(n);
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
  for (int rep = 0; rep < n; ++rep)
    for (int i = n - 1; i >= 1; --i) letters.push_back(i);
  return BraidWord(n, letters);
}

}  // namespace mono
