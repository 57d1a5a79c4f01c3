#pragma once

// Enumeration of S(m, delta) by breadth-first search over increasing flips,
// with both higher Stasheff-Tamari orders stored as bit matrices.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stlab/bits.hpp"
#include "stlab/core.hpp"
#include "stlab/error.hpp"
#include "stlab/even.hpp"
#include "stlab/odd.hpp"
#include "stlab/parallel.hpp"

namespace stlab {

struct EnumerateOptions {
  std::size_t max_elements = 1'000'000;
  double max_seconds = 600.0;
  int threads = 1;
};

enum class Order { First, Second };

class StasheffTamariPoset {
 public:
  int m = 0;
  int delta = 0;
  std::shared_ptr<const EvenSpace> even_space;  // set when delta is even
  std::shared_ptr<const OddSpace> odd_space;    // set when delta is odd

  /// Encodings (e-sets or internal sets) sorted lexicographically.
  std::vector<Bits> elements;
  /// hasse1[i]: indices j with i covered by j in the first order, ascending.
  std::vector<std::vector<std::uint32_t>> hasse1;
  /// rel1[i], rel2[i]: up-sets of i (including i) in each order.
  std::vector<Bits> rel1;
  std::vector<Bits> rel2;
  std::size_t bottom = 0;
  std::size_t top = 0;

  bool odd() const noexcept { return delta % 2 == 1; }
  int d() const noexcept { return delta / 2; }
  std::size_t size() const noexcept { return elements.size(); }

  const TupleUniverse& universe() const { return odd() ? odd_space->universe() : even_space->universe(); }
  std::vector<Tuple> tuples(std::size_t i) const { return universe().decode(elements[i]); }
  std::string label(std::size_t i) const { return join_tuples(tuples(i)); }

  EvenTriangulation even(std::size_t i) const {
    if (odd()) throw Error(ErrorKind::NotApplicable, "poset of an odd-dimensional polytope");
    return EvenTriangulation(even_space, elements[i]);
  }
  OddTriangulation odd_element(std::size_t i) const {
    if (!odd()) throw Error(ErrorKind::NotApplicable, "poset of an even-dimensional polytope");
    return OddTriangulation(odd_space, elements[i]);
  }

  std::optional<std::size_t> find(const Bits& b) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), b, [](const Bits& x, const Bits& y) { return lex_less(x, y); });
    if (it == elements.end() || !(*it == b)) return std::nullopt;
    return static_cast<std::size_t>(it - elements.begin());
  }

  const std::vector<Bits>& relation(Order o) const { return o == Order::First ? rel1 : rel2; }

  std::size_t hasse1_edge_count() const {
    std::size_t c = 0;
    for (const auto& h : hasse1) c += h.size();
    return c;
  }
};

namespace detail {

inline std::vector<Bits> covers_of(const StasheffTamariPoset& p, const Bits& x) {
  std::vector<Bits> out;
  if (p.odd()) {
    const auto& space = *p.odd_space;
    x.for_each([&](std::size_t i) {
      Bits next = x;
      next.reset(i);
      if (space.valid(next)) out.push_back(std::move(next));
    });
  } else {
    const auto& space = *p.even_space;
    x.for_each([&](std::size_t a) {
      Bits rest = x;
      rest.reset(a);
      for (std::size_t b : space.intertwining_targets(a)) {
        if (rest.test(b) || space.crossing(b).intersects(rest)) continue;
        Bits next = rest;
        next.set(b);
        out.push_back(std::move(next));
      }
    });
  }
  return out;
}

inline Bits bottom_of(const StasheffTamariPoset& p) {
  return p.odd() ? lower_odd(p.m, p.d()).bits() : lower_even(p.m, p.d()).bits();
}

/// Order of indices in which every element precedes its strict up-set.
inline std::vector<std::size_t> linear_extension(const std::vector<Bits>& up) {
  std::vector<std::size_t> order(up.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> height(up.size());
  for (std::size_t i = 0; i < up.size(); ++i) height[i] = up[i].count();
  // A larger up-set strictly contains any up-set it precedes.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return height[a] > height[b]; });
  return order;
}

}  // namespace detail

/// Every triangulation of C(m, delta), reached from the lower triangulation by
/// increasing flips; elements are sorted canonically so the result does not
/// depend on the thread count.
inline StasheffTamariPoset enumerate(int m, int delta, const EnumerateOptions& opts = {}) {
  check_vertex_count(m);
  if (delta < 1) throw Error(ErrorKind::DegeneratePolytope, "dimension must be positive");
  if (m < delta + 1)
    throw Error(ErrorKind::DegeneratePolytope,
                "C(" + std::to_string(m) + "," + std::to_string(delta) + ") needs at least delta + 1 vertices");
  if (opts.max_elements == 0 || opts.max_seconds <= 0) throw Error(ErrorKind::InvalidElement, "caps must be positive");
  StasheffTamariPoset p;
  p.m = m;
  p.delta = delta;
  if (delta % 2) p.odd_space = OddSpace::get(m, delta / 2);
  else p.even_space = EvenSpace::get(m, delta / 2);

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  std::vector<Bits> found;
  std::unordered_map<Bits, std::uint32_t, BitsHash> index;
  std::vector<std::vector<std::uint32_t>> edges;
  found.push_back(detail::bottom_of(p));
  index.emplace(found[0], 0);
  edges.emplace_back();

  std::vector<std::uint32_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::vector<Bits>> next_sets(frontier.size());
    parallel_for(frontier.size(), opts.threads, [&](std::size_t k) { next_sets[k] = detail::covers_of(p, found[frontier[k]]); });
    std::vector<std::uint32_t> next;
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      for (auto& b : next_sets[k]) {
        auto [it, fresh] = index.try_emplace(b, static_cast<std::uint32_t>(found.size()));
        if (fresh) {
          if (found.size() >= opts.max_elements)
            throw ResourceError("element cap " + std::to_string(opts.max_elements) + " reached", found.size());
          found.push_back(std::move(b));
          edges.emplace_back();
          next.push_back(it->second);
        }
        edges[frontier[k]].push_back(it->second);
      }
    }
    if (elapsed() > opts.max_seconds)
      throw ResourceError("time cap of " + std::to_string(opts.max_seconds) + " s reached", found.size());
    frontier = std::move(next);
  }

  const std::size_t n = found.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return lex_less(found[a], found[b]); });
  std::vector<std::uint32_t> rank(n);
  for (std::uint32_t r = 0; r < n; ++r) rank[order[r]] = r;

  p.elements.resize(n);
  p.hasse1.assign(n, {});
  for (std::uint32_t r = 0; r < n; ++r) {
    p.elements[r] = std::move(found[order[r]]);
    for (std::uint32_t j : edges[order[r]]) p.hasse1[r].push_back(rank[j]);
    std::sort(p.hasse1[r].begin(), p.hasse1[r].end());
  }
  p.bottom = rank[0];
  std::size_t sinks = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (p.hasse1[i].empty()) {
      p.top = i;
      ++sinks;
    }
  if (sinks != 1) throw Error(ErrorKind::InternalConsistency, "first order has " + std::to_string(sinks) + " maximal elements");

  // rel1: reachability, filled in reverse topological order of hasse1.
  std::vector<std::uint32_t> indegree(n, 0);
  for (const auto& h : p.hasse1)
    for (std::uint32_t j : h) ++indegree[j];
  std::vector<std::uint32_t> topo;
  topo.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i)
    if (indegree[i] == 0) topo.push_back(i);
  for (std::size_t k = 0; k < topo.size(); ++k)
    for (std::uint32_t j : p.hasse1[topo[k]])
      if (--indegree[j] == 0) topo.push_back(j);
  if (topo.size() != n) throw Error(ErrorKind::InternalConsistency, "first order has a cycle");
  p.rel1.assign(n, Bits(n));
  for (std::size_t k = n; k-- > 0;) {
    const std::uint32_t i = topo[k];
    p.rel1[i].set(i);
    for (std::uint32_t j : p.hasse1[i]) p.rel1[i] |= p.rel1[j];
  }
  if (elapsed() > opts.max_seconds) throw ResourceError("time cap reached while closing the first order", n);

  p.rel2.assign(n, Bits(n));
  if (p.odd()) {
    parallel_for(n, opts.threads, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j)
        if (p.elements[j].is_subset_of(p.elements[i])) p.rel2[i].set(j);
    });
  } else {
    std::vector<Bits> sub(n);
    parallel_for(n, opts.threads, [&](std::size_t j) { sub[j] = submerged_mask(p.even(j)); });
    parallel_for(n, opts.threads, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j)
        if (p.elements[i].is_subset_of(sub[j])) p.rel2[i].set(j);
    });
  }
  if (elapsed() > opts.max_seconds) throw ResourceError("time cap reached while building the second order", n);
  return p;
}

struct OrderComparison {
  bool equal = true;
  /// First pair (i, j), in row-major index order, on which the orders differ.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  bool witness_in_first = false;  // true when i <=_1 j but not i <=_2 j
  bool first_within_second = true;
};

inline OrderComparison compare_orders(const StasheffTamariPoset& p) {
  OrderComparison out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.rel1[i].is_subset_of(p.rel2[i])) out.first_within_second = false;
    if (!out.witness && !(p.rel1[i] == p.rel2[i])) {
      std::size_t j = ((p.rel1[i] - p.rel2[i]) | (p.rel2[i] - p.rel1[i])).first();
      out.equal = false;
      out.witness = std::make_pair(i, j);
      out.witness_in_first = p.rel1[i].test(j);
    }
  }
  return out;
}

inline bool orders_equal(const StasheffTamariPoset& p) { return compare_orders(p).equal; }

struct LatticeCheck {
  bool is_lattice = true;
  /// First pair (i < j) without a join.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

namespace detail {

/// First pair without a least upper bound in the relation given by up-sets.
inline std::optional<std::pair<std::size_t, std::size_t>> first_joinless_pair(const std::vector<Bits>& up, int threads) {
  const std::size_t n = up.size();
  auto ext = linear_extension(up);
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[ext[k]] = k;
  // Up-sets re-indexed by position in the linear extension, so the least
  // element of any up-set intersection is its first set bit.
  std::vector<Bits> ups(n, Bits(n));
  for (std::size_t k = 0; k < n; ++k) up[ext[k]].for_each([&](std::size_t j) { ups[k].set(pos[j]); });
  // Rows are scanned in blocks so a failure stops the scan early while the
  // reported pair stays the first one in row-major order.
  std::vector<std::size_t> first_bad(n, n);
  const std::size_t block = static_cast<std::size_t>(std::max(1, threads)) * 8;
  for (std::size_t lo = 0; lo < n; lo += block) {
    const std::size_t hi = std::min(n, lo + block);
    parallel_for(hi - lo, threads, [&](std::size_t r) {
      const std::size_t i = lo + r;
      const std::size_t a = pos[i];
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t b = pos[j];
        if (ups[a].test(b) || ups[b].test(a)) continue;
        Bits common = ups[a] & ups[b];
        std::size_t c = common.first();
        if (c == n || !common.is_subset_of(ups[c])) {
          first_bad[i] = j;
          return;
        }
      }
    });
    for (std::size_t i = lo; i < hi; ++i)
      if (first_bad[i] < n) return std::make_pair(i, first_bad[i]);
  }
  return std::nullopt;
}

}  // namespace detail

/// Every pair has a join in the chosen order. The poset is finite with a
/// least element, so this already gives every meet.
inline LatticeCheck check_lattice(const StasheffTamariPoset& p, Order which, int threads = 1) {
  LatticeCheck out;
  if (auto bad = detail::first_joinless_pair(p.relation(which), threads)) {
    out.is_lattice = false;
    out.witness = bad;
  }
  return out;
}

inline bool is_lattice(const StasheffTamariPoset& p, Order which, int threads = 1) {
  return check_lattice(p, which, threads).is_lattice;
}

/// Cover pairs of a relation given by up-sets.
inline std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(const std::vector<Bits>& up) {
  const std::size_t n = up.size();
  auto ext = detail::linear_extension(up);
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[ext[k]] = k;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> above;
    up[i].for_each([&](std::size_t j) {
      if (j != i) above.push_back(j);
    });
    std::sort(above.begin(), above.end(), [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
    Bits reached(n);
    for (std::size_t j : above) {
      if (reached.test(j)) continue;
      out.emplace_back(i, j);
      reached |= up[j];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Vertex reversal induces an order-reversing bijection of both orders.
inline bool self_duality_check(const StasheffTamariPoset& p) {
  if (p.odd())
    throw Error(ErrorKind::NotApplicable, "posets of odd-dimensional cyclic polytopes are not self-dual");
  const std::size_t n = p.size();
  std::vector<std::size_t> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto j = p.find(reverse(p.even(i)).bits());
    if (!j) return false;
    image[i] = *j;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (p.rel1[i].test(j) != p.rel1[image[j]].test(image[i])) return false;
      if (p.rel2[i].test(j) != p.rel2[image[j]].test(image[i])) return false;
    }
  return true;
}

struct EmbeddingCheck {
  std::size_t ground_size = 0;
  bool injective = true;
  bool order_compatible = true;
};

/// Checks the Boolean embedding over every element: injectivity and
/// T <=_2 T' iff image(T) is contained in image(T') (even) or contains it (odd).
inline EmbeddingCheck check_boolean_embedding(const StasheffTamariPoset& p) {
  const std::size_t n = p.size();
  EmbeddingCheck out;
  std::vector<Tuple> ground = p.odd() ? embedding_ground_odd(p.m, p.d()) : embedding_ground_even(p.m, p.d());
  out.ground_size = ground.size();
  TupleUniverse g(ground);
  std::vector<Bits> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto ts = p.odd() ? boolean_embedding_odd(p.odd_element(i)) : boolean_embedding_even(p.even(i));
    Bits b = g.empty_set();
    for (const auto& t : ts) {
      auto idx = g.find(t);
      if (!idx) throw Error(ErrorKind::InternalConsistency, "embedding image leaves its ground set");
      b.set(*idx);
    }
    image[i] = std::move(b);
  }
  std::unordered_map<Bits, std::size_t, BitsHash> seen;
  for (std::size_t i = 0; i < n; ++i)
    if (!seen.emplace(image[i], i).second) out.injective = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool included = p.odd() ? image[j].is_subset_of(image[i]) : image[i].is_subset_of(image[j]);
      if (p.rel2[i].test(j) != included) out.order_compatible = false;
    }
  return out;
}

}  // namespace stlab
