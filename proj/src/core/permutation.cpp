#include "core/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "core/error.hpp"

namespace mono {

Permutation::Permutation(int degree) {
  if (degree < 0) fail_invalid("permutation degree must be nonnegative");
  image_.resize(static_cast<std::size_t>(degree));
  std::iota(image_.begin(), image_.end(), 0);
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a < 1 || b < 1 || a > degree || b > degree || a == b)
    fail_invalid("bad transposition (" + std::to_string(a) + " " + std::to_string(b) + ") in S_" +
                 std::to_string(degree));
  Permutation p(degree);
  std::swap(p.image_[static_cast<std::size_t>(a - 1)], p.image_[static_cast<std::size_t>(b - 1)]);
  return p;
}

int Permutation::apply(int point) const {
  if (point < 1 || point > degree()) fail_invalid("point out of range");
  return image_[static_cast<std::size_t>(point - 1)] + 1;
}

Permutation Permutation::compose(const Permutation& then) const {
  if (degree() != then.degree()) fail_mismatch("permutation degrees differ");
  Permutation r;
  r.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    r.image_[i] = then.image_[static_cast<std::size_t>(image_[i])];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    r.image_[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
  return r;
}

Permutation Permutation::conjugate_by(const Permutation& b) const {
  return b.inverse().compose(*this).compose(b);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::one_line() const {
  std::string s = "[";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(image_[i] + 1);
  }
  s += ']';
  return s;
}

std::string Permutation::cycles() const {
  std::string s;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start] || image_[start] == static_cast<int>(start)) continue;
    s += '(';
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) s += ' ';
      s += std::to_string(p + 1);
      first = false;
      p = static_cast<std::size_t>(image_[p]);
    }
    s += ')';
  }
  return s.empty() ? "e" : s;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    std::size_t p = start;
    while (!seen[p]) {
      seen[p] = true;
      ++len;
      p = static_cast<std::size_t>(image_[p]);
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

}  // namespace mono
