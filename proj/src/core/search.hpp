#ifndef MONO_CORE_SEARCH_HPP
#define MONO_CORE_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/factorization.hpp"
#include "core/parallel.hpp"

namespace mono {

// One step of an equivalence certificate. Conjugation steps carry the
// conjugator as a word in the context's syntax, already inverted if the
// search applied the inverse, so a certificate replays without knowing
// the conjugator list it was found with.
struct CertificateStep {
  enum class Kind { Hurwitz, Conjugate, Rotate };
  Kind kind = Kind::Hurwitz;
  int index = 0;       // Hurwitz position (1-based)
  int direction = +1;  // Hurwitz/rotate: +1 forward, -1 inverse
  std::string conjugator;
};

// Honest three-valued outcome of the orbit search.
struct EquivalenceVerdict {
  enum class Kind { Equivalent, Inequivalent, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<CertificateStep> certificate;               // Equivalent only
  std::string witness_name, witness_left, witness_right;  // Inequivalent only
  std::uint64_t nodes_explored = 0;
  std::string note;
};

struct OrbitResult {
  std::vector<std::string> keys;  // canonical keys, sorted
  bool exhausted = false;
  std::uint64_t nodes_explored = 0;
};

struct SearchOptions {
  std::uint64_t budget = 100000;
  bool allow_conjugation = false;
  bool allow_rotation = false;
  int threads = 1;
};

namespace detail {

struct SearchMove {
  CertificateStep::Kind kind;
  int index;      // hurwitz position / conjugator list index
  int direction;  // +1 / -1
};

inline SearchMove inverted(const SearchMove& m) { return {m.kind, m.index, -m.direction}; }

template <GroupContextType G>
Factorization<G> apply_move(const Factorization<G>& f, const SearchMove& m,
                            const std::vector<typename G::Element>& conjugators) {
  switch (m.kind) {
    case CertificateStep::Kind::Hurwitz:
      return f.hurwitz_move(m.index, m.direction > 0);
    case CertificateStep::Kind::Rotate:
      return f.rotated(m.direction);
    case CertificateStep::Kind::Conjugate: {
      const auto& c = conjugators[static_cast<std::size_t>(m.index)];
      return f.simultaneous_conjugate(m.direction > 0 ? c : f.context().invert(c));
    }
  }
  fail_invalid("unreachable move kind");
}

// Deterministic move order: Hurwitz positions (forward, inverse), then
// rotations, then conjugators (as listed, then inverted).
template <GroupContextType G>
std::vector<SearchMove> move_set(const Factorization<G>& f, const SearchOptions& opts,
                                 std::size_t conjugator_count) {
  std::vector<SearchMove> moves;
  for (int i = 1; static_cast<std::size_t>(i) < f.size(); ++i) {
    moves.push_back({CertificateStep::Kind::Hurwitz, i, +1});
    moves.push_back({CertificateStep::Kind::Hurwitz, i, -1});
  }
  if (opts.allow_rotation && f.size() >= 2) {
    moves.push_back({CertificateStep::Kind::Rotate, 0, +1});
    moves.push_back({CertificateStep::Kind::Rotate, 0, -1});
  }
  if (opts.allow_conjugation)
    for (std::size_t c = 0; c < conjugator_count; ++c) {
      moves.push_back({CertificateStep::Kind::Conjugate, static_cast<int>(c), +1});
      moves.push_back({CertificateStep::Kind::Conjugate, static_cast<int>(c), -1});
    }
  return moves;
}

template <GroupContextType G>
CertificateStep to_step(const G& ctx, const SearchMove& m,
                        const std::vector<typename G::Element>& conjugators) {
  CertificateStep s;
  s.kind = m.kind;
  s.index = m.index;
  s.direction = m.direction;
  if (m.kind == CertificateStep::Kind::Conjugate) {
    const auto& c = conjugators[static_cast<std::size_t>(m.index)];
    s.conjugator = ctx.format(m.direction > 0 ? c : ctx.invert(c));
    s.direction = +1;  // baked into the word
  }
  return s;
}

// One side of the bidirectional search: discovered states with parent
// links for certificate reconstruction.
template <GroupContextType G>
struct SearchSide {
  std::vector<Factorization<G>> states;
  std::vector<std::int64_t> parent;
  std::vector<SearchMove> via;
  std::unordered_map<std::string, std::size_t> by_key;
  std::size_t frontier_begin = 0;

  explicit SearchSide(const Factorization<G>& root) {
    states.push_back(root);
    parent.push_back(-1);
    via.push_back({});
    by_key.emplace(root.key(), 0);
  }

  // Path of moves from the root to state id.
  std::vector<SearchMove> path_from_root(std::size_t id) const {
    std::vector<SearchMove> rev;
    for (std::int64_t at = static_cast<std::int64_t>(id); parent[static_cast<std::size_t>(at)] >= 0;
         at = parent[static_cast<std::size_t>(at)])
      rev.push_back(via[static_cast<std::size_t>(at)]);
    return {rev.rbegin(), rev.rend()};
  }
};

template <GroupContextType G>
struct Neighbor {
  SearchMove move;
  Factorization<G> state;
  std::string key;
};

// Expands the current frontier of `side`. Neighbor lists are computed in
// parallel into per-state slots and committed in state order, so the
// discovered set, parent links and node counts do not depend on the
// thread count. Returns the id pair (this side, other side) on a meet.
template <GroupContextType G>
std::optional<std::pair<std::size_t, std::size_t>> expand_level(
    SearchSide<G>& side, const SearchSide<G>* other, const SearchOptions& opts,
    const std::vector<typename G::Element>& conjugators, std::uint64_t& nodes_explored,
    bool& budget_exhausted) {
  const std::size_t level_begin = side.frontier_begin;
  const std::size_t level_end = side.states.size();
  side.frontier_begin = level_end;
  const std::size_t count = level_end - level_begin;
  if (count == 0) return std::nullopt;

  const auto moves = move_set(side.states[level_begin], opts, conjugators.size());
  std::vector<std::vector<Neighbor<G>>> slots(count);
  parallel_chunks(count, opts.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const Factorization<G>& f = side.states[level_begin + k];
      slots[k].reserve(moves.size());
      for (const SearchMove& m : moves) {
        Factorization<G> g = apply_move(f, m, conjugators);
        std::string key = g.key();
        slots[k].push_back({m, std::move(g), std::move(key)});
      }
    }
  });

  for (std::size_t k = 0; k < count; ++k) {
    if (nodes_explored >= opts.budget) {
      budget_exhausted = true;
      return std::nullopt;
    }
    ++nodes_explored;
    for (Neighbor<G>& nb : slots[k]) {
      auto [it, inserted] = side.by_key.emplace(nb.key, side.states.size());
      if (!inserted) continue;
      side.states.push_back(std::move(nb.state));
      side.parent.push_back(static_cast<std::int64_t>(level_begin + k));
      side.via.push_back(nb.move);
      if (other) {
        auto hit = other->by_key.find(nb.key);
        if (hit != other->by_key.end()) return std::make_pair(side.states.size() - 1, hit->second);
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Breadth-first enumeration of the Hurwitz orbit (elementary moves only).
template <GroupContextType G>
OrbitResult orbit_enumerate(const Factorization<G>& f, std::uint64_t budget, int threads = 1) {
  if (budget == 0) fail_invalid("orbit budget must be positive");
  SearchOptions opts;
  opts.budget = budget;
  opts.threads = threads;
  detail::SearchSide<G> side(f);
  std::vector<typename G::Element> no_conjugators;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  while (side.frontier_begin < side.states.size() && !out_of_budget)
    detail::expand_level(side, static_cast<detail::SearchSide<G>*>(nullptr), opts, no_conjugators, nodes,
                         out_of_budget);
  OrbitResult r;
  r.exhausted = !out_of_budget;
  r.nodes_explored = nodes;
  r.keys.reserve(side.states.size());
  for (const auto& [key, id] : side.by_key) r.keys.push_back(key);
  std::sort(r.keys.begin(), r.keys.end());
  return r;
}

// Bidirectional breadth-first search for a chain of moves from a to b.
//   Equivalent:   certificate of moves replaying a to b exactly.
//   Inequivalent: a move-stable invariant differs, or one finite orbit was
//                 exhausted (exact-equality contexts only).
//   Unknown:      budget ran out, or a word-level orbit was exhausted in a
//                 context whose keys are finer than group equality.
template <GroupContextType G>
EquivalenceVerdict hurwitz_equivalent(const Factorization<G>& a, const Factorization<G>& b,
                                      const SearchOptions& opts,
                                      const std::vector<typename G::Element>& conjugators = {}) {
  if (a.context().name() != b.context().name())
    fail_mismatch("factorizations live over " + a.context().name() + " and " + b.context().name());
  if (opts.budget == 0) fail_invalid("search budget must be positive");
  if (opts.allow_conjugation && conjugators.empty())
    fail_invalid("conjugation enabled but the conjugator list is empty");

  EquivalenceVerdict v;

  // Invariant gates; each is stable under every enabled move.
  if (a.size() != b.size()) {
    v.kind = EquivalenceVerdict::Kind::Inequivalent;
    v.witness_name = "length";
    v.witness_left = std::to_string(a.size());
    v.witness_right = std::to_string(b.size());
    return v;
  }
  const bool product_conjugated = opts.allow_conjugation || opts.allow_rotation;
  if (!product_conjugated) {
    std::string pa = a.context().key(a.product()), pb = b.context().key(b.product());
    if (pa != pb) {
      v.kind = EquivalenceVerdict::Kind::Inequivalent;
      v.witness_name = "product";
      v.witness_left = pa;
      v.witness_right = pb;
      return v;
    }
  } else {
    std::string pa = a.context().class_key(a.product()), pb = b.context().class_key(b.product());
    if (pa != pb) {
      v.kind = EquivalenceVerdict::Kind::Inequivalent;
      v.witness_name = "product-class";
      v.witness_left = pa;
      v.witness_right = pb;
      return v;
    }
  }
  {
    auto multiset_key = [](const Factorization<G>& f) {
      std::vector<std::string> ks;
      ks.reserve(f.size());
      for (const auto& g : f.factors()) ks.push_back(f.context().class_key(g));
      std::sort(ks.begin(), ks.end());
      std::string s;
      for (std::size_t i = 0; i < ks.size(); ++i) {
        if (i) s += " / ";
        s += ks[i];
      }
      return s;
    };
    std::string ma = multiset_key(a), mb = multiset_key(b);
    if (ma != mb) {
      v.kind = EquivalenceVerdict::Kind::Inequivalent;
      v.witness_name = "factor-class-multiset";
      v.witness_left = ma;
      v.witness_right = mb;
      return v;
    }
  }

  if (a.key() == b.key()) {
    v.kind = EquivalenceVerdict::Kind::Equivalent;
    return v;
  }

  detail::SearchSide<G> fwd(a), bwd(b);
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  std::optional<std::pair<std::size_t, std::size_t>> meet;
  bool met_on_forward = true;

  while (!out_of_budget) {
    const std::size_t fsize = fwd.states.size() - fwd.frontier_begin;
    const std::size_t bsize = bwd.states.size() - bwd.frontier_begin;
    if (fsize == 0 || bsize == 0) {
      // One orbit fully enumerated without meeting the other side.
      const auto& done = fsize == 0 ? fwd : bwd;
      v.nodes_explored = nodes;
      if (G::exact_equality) {
        v.kind = EquivalenceVerdict::Kind::Inequivalent;
        v.witness_name = "orbit-exhausted";
        v.witness_left = (fsize == 0 ? "left" : "right") + std::string(" orbit closed at size ") +
                         std::to_string(done.states.size());
        v.witness_right = "other factorization not in it";
      } else {
        v.kind = EquivalenceVerdict::Kind::Unknown;
        v.note = "word-level orbit exhausted (size " + std::to_string(done.states.size()) +
                 ") without meeting; keys over " + a.context().name() +
                 " are finer than group equality, so this does not witness inequivalence";
      }
      return v;
    }
    bool expand_forward = fsize <= bsize;
    if (expand_forward)
      meet = detail::expand_level(fwd, &bwd, opts, conjugators, nodes, out_of_budget);
    else
      meet = detail::expand_level(bwd, &fwd, opts, conjugators, nodes, out_of_budget);
    if (meet) {
      met_on_forward = expand_forward;
      break;
    }
  }

  v.nodes_explored = nodes;
  if (!meet) {
    v.kind = EquivalenceVerdict::Kind::Unknown;
    return v;
  }

  const std::size_t fwd_id = met_on_forward ? meet->first : meet->second;
  const std::size_t bwd_id = met_on_forward ? meet->second : meet->first;
  std::vector<detail::SearchMove> path = fwd.path_from_root(fwd_id);
  std::vector<detail::SearchMove> back = bwd.path_from_root(bwd_id);
  for (auto it = back.rbegin(); it != back.rend(); ++it) path.push_back(detail::inverted(*it));
  v.kind = EquivalenceVerdict::Kind::Equivalent;
  v.certificate.reserve(path.size());
  for (const auto& m : path) v.certificate.push_back(detail::to_step(a.context(), m, conjugators));
  return v;
}

// Replays a certificate.
template <GroupContextType G>
Factorization<G> apply_certificate(const Factorization<G>& f, const std::vector<CertificateStep>& steps) {
  Factorization<G> at = f;
  for (const CertificateStep& s : steps) {
    switch (s.kind) {
      case CertificateStep::Kind::Hurwitz:
        at = at.hurwitz_move(s.index, s.direction > 0);
        break;
      case CertificateStep::Kind::Rotate:
        at = at.rotated(s.direction);
        break;
      case CertificateStep::Kind::Conjugate:
        at = at.simultaneous_conjugate(at.context().parse(s.conjugator));
        break;
    }
  }
  return at;
}

}  // namespace mono

#endif
