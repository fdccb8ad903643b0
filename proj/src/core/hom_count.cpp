#include "core/hom_count.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <vector>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace mono {

namespace {

// S_k as index tables: elements in lexicographic one-line order, with
// composition and inverse tables. k <= 6 keeps this tiny (720 elements).
struct SymmetricTable {
  int k;
  std::size_t order;
  std::vector<std::vector<std::uint8_t>> elements;
  std::vector<std::uint16_t> compose;  // compose[a * order + b] = a then b
  std::vector<std::uint16_t> inverse;

  explicit SymmetricTable(int k_) : k(k_) {
    std::vector<std::uint8_t> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      elements.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    order = elements.size();

    std::vector<std::size_t> code_to_index(pow_k_k(), 0);
    for (std::size_t e = 0; e < order; ++e) code_to_index[code(elements[e])] = e;

    compose.resize(order * order);
    inverse.resize(order);
    std::vector<std::uint8_t> tmp(static_cast<std::size_t>(k));
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        for (int i = 0; i < k; ++i) tmp[static_cast<std::size_t>(i)] = elements[b][elements[a][static_cast<std::size_t>(i)]];
        compose[a * order + b] = static_cast<std::uint16_t>(code_to_index[code(tmp)]);
      }
      for (int i = 0; i < k; ++i) tmp[elements[a][static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
      inverse[a] = static_cast<std::uint16_t>(code_to_index[code(tmp)]);
    }
  }

  std::size_t pow_k_k() const {
    std::size_t p = 1;
    for (int i = 0; i < k; ++i) p *= static_cast<std::size_t>(k);
    return p;
  }

  std::size_t code(const std::vector<std::uint8_t>& p) const {
    std::size_t c = 0;
    for (int i = 0; i < k; ++i) c = c * static_cast<std::size_t>(k) + p[static_cast<std::size_t>(i)];
    return c;
  }
};

struct CompiledRelator {
  std::vector<Letter> letters;
  int max_generator;
};

std::uint64_t count_from(const SymmetricTable& table, const std::vector<CompiledRelator>& relators,
                         std::vector<std::uint16_t>& images, int next_gen, int gen_count) {
  if (next_gen > gen_count) return 1;
  std::uint64_t total = 0;
  for (std::size_t img = 0; img < table.order; ++img) {
    images[static_cast<std::size_t>(next_gen - 1)] = static_cast<std::uint16_t>(img);
    bool ok = true;
    for (const auto& rel : relators) {
      if (rel.max_generator != next_gen) continue;  // checked once, as soon as checkable
      std::uint16_t acc = 0;  // identity sits at index 0 in lexicographic order
      for (Letter x : rel.letters) {
        std::uint16_t gi = images[static_cast<std::size_t>(letter_index(x) - 1)];
        if (x < 0) gi = table.inverse[gi];
        acc = table.compose[static_cast<std::size_t>(acc) * table.order + gi];
      }
      if (acc != 0) {
        ok = false;
        break;
      }
    }
    if (ok) total += count_from(table, relators, images, next_gen + 1, gen_count);
  }
  return total;
}

}  // namespace

std::uint64_t count_homomorphisms(const GroupPresentation& p, int k, int threads) {
  if (k < 1 || k > 6) fail_invalid("homomorphism counting supports S_k for k in 1..6");
  if (p.generator_count == 0) return 1;

  static thread_local int cached_k = 0;
  static thread_local std::unique_ptr<SymmetricTable> cached;
  if (cached_k != k) {
    cached = std::make_unique<SymmetricTable>(k);
    cached_k = k;
  }
  const SymmetricTable& table = *cached;

  std::vector<CompiledRelator> relators;
  relators.reserve(p.relators.size());
  for (const FreeWord& r : p.relators) {
    if (r.max_generator() > p.generator_count)
      fail_invalid("relator uses a generator beyond the presentation's count");
    relators.push_back({r.letters(), std::max(1, r.max_generator())});
  }

  // Split on the image of the first generator; partial sums are exact
  // integers, so the total is independent of the partitioning.
  std::vector<std::uint64_t> partial(table.order, 0);
  parallel_chunks(table.order, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint16_t> images(static_cast<std::size_t>(p.generator_count), 0);
    for (std::size_t img = begin; img < end; ++img) {
      images[0] = static_cast<std::uint16_t>(img);
      bool ok = true;
      for (const auto& rel : relators) {
        if (rel.max_generator != 1) continue;
        std::uint16_t acc = 0;
        for (Letter x : rel.letters) {
          std::uint16_t gi = images[static_cast<std::size_t>(letter_index(x) - 1)];
          if (x < 0) gi = table.inverse[gi];
          acc = table.compose[static_cast<std::size_t>(acc) * table.order + gi];
        }
        if (acc != 0) {
          ok = false;
          break;
        }
      }
      if (ok) partial[img] = count_from(table, relators, images, 2, p.generator_count);
    }
  });

  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total += c;
  return total;
}

}  // namespace mono
