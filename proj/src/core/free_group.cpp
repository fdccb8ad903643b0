#include "core/free_group.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace mono {

FreeWord FreeWord::reduce(std::span<const Letter> raw) {
  FreeWord w;
  w.letters_.reserve(raw.size());
  for (Letter x : raw) {
    if (x == 0) fail_invalid("generator index must be nonzero");
    if (!w.letters_.empty() && w.letters_.back() == -x)
      w.letters_.pop_back();
    else
      w.letters_.push_back(x);
  }
  return w;
}

FreeWord FreeWord::generator(int index, int sign) {
  if (index <= 0) fail_invalid("generator index must be positive");
  FreeWord w;
  w.letters_.push_back(sign < 0 ? -index : index);
  return w;
}

int FreeWord::max_generator() const {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, letter_index(x));
  return m;
}

FreeWord FreeWord::multiply(const FreeWord& rhs) const {
  // Both operands are reduced, so cancellation happens only at the seam.
  FreeWord w = *this;
  for (Letter x : rhs.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -x)
      w.letters_.pop_back();
    else
      w.letters_.push_back(x);
  }
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

FreeWord FreeWord::conjugate_by(const FreeWord& b) const {
  return b.inverse().multiply(*this).multiply(b);
}

FreeWord apply_endomorphism(std::span<const FreeWord> images, const FreeWord& w) {
  std::vector<Letter> out;
  for (Letter x : w.letters()) {
    int i = letter_index(x);
    if (i > static_cast<int>(images.size()))
      fail_invalid("no image supplied for generator g" + std::to_string(i));
    const FreeWord& img = images[static_cast<std::size_t>(i - 1)];
    if (x > 0) {
      for (Letter y : img.letters()) out.push_back(y);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) out.push_back(-*it);
    }
  }
  return FreeWord::reduce(out);
}

GroupPresentation punctured_sphere_presentation(int k) {
  if (k < 1) fail_invalid("punctured sphere needs k >= 1");
  std::vector<Letter> rel(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) rel[static_cast<std::size_t>(i - 1)] = i;
  return GroupPresentation{k, {FreeWord::reduce(rel)}};
}

GroupPresentation surface_presentation(int g) {
  if (g < 0) fail_invalid("genus must be nonnegative");
  if (g == 0) return GroupPresentation{0, {}};
  std::vector<Letter> rel;
  rel.reserve(static_cast<std::size_t>(4 * g));
  for (int i = 1; i <= g; ++i) {
    Letter a = 2 * i - 1, b = 2 * i;
    rel.insert(rel.end(), {a, b, -a, -b});
  }
  return GroupPresentation{2 * g, {FreeWord::reduce(rel)}};
}

}  // namespace mono
