#pragma once

// The combinatorial side of the higher Auslander algebras A_n^d of type A:
// quiver, module labels, mutation, and chains of tilting modules (or
// cluster-tilting objects) read off from odd-dimensional triangulations.

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "stlab/core.hpp"
#include "stlab/error.hpp"
#include "stlab/even.hpp"
#include "stlab/odd.hpp"
#include "stlab/parallel.hpp"
#include "stlab/poset.hpp"

namespace stlab {

struct QuiverArrow {
  Tuple source;
  Tuple target;
  int index = 0;  // target = source + 1_index
};

/// source -> source+1_first -> source+1_first+1_second equals the path through
/// source+1_second, or zero when that vertex is missing.
struct QuiverRelation {
  Tuple source;
  int first = 0;
  int second = 0;
  bool zero = false;
};

struct QuiverPresentation {
  int n = 0;
  int d = 0;
  std::vector<Tuple> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<QuiverRelation> relations;
};

namespace detail {
inline std::optional<Tuple> bump(const Tuple& a, int i) {
  auto e = a.entries();
  ++e[static_cast<std::size_t>(i)];
  for (std::size_t k = 1; k < e.size(); ++k)
    if (e[k] <= e[k - 1]) return std::nullopt;
  if (e.back() > kMaxVertices) return std::nullopt;
  return Tuple(e);
}
}  // namespace detail

/// Q^(d,n): vertices are the separated d-tuples of [n + 2d - 2], arrows add 1
/// to one entry.
inline QuiverPresentation build_quiver(int n, int d) {
  if (n < 1 || d < 1) throw Error(ErrorKind::InvalidElement, "quiver needs n >= 1 and d >= 1");
  QuiverPresentation q;
  q.n = n;
  q.d = d;
  const int top = n + 2 * d - 2;
  check_vertex_count(top);
  q.vertices = separated_tuples(top, d - 1);
  std::unordered_set<std::uint64_t> vertex_set;
  for (const auto& v : q.vertices) vertex_set.insert(v.mask());
  auto is_vertex = [&](const std::optional<Tuple>& t) { return t && within(*t, top) && vertex_set.count(t->mask()); };
  for (const auto& a : q.vertices)
    for (int i = 0; i < d; ++i) {
      auto b = detail::bump(a, i);
      if (is_vertex(b)) q.arrows.push_back({a, *b, i});
    }
  for (const auto& a : q.vertices)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        auto ai = detail::bump(a, i);
        if (!is_vertex(ai)) continue;
        auto aij = detail::bump(*ai, j);
        if (!is_vertex(aij)) continue;
        bool through_j = is_vertex(detail::bump(a, j));
        // Commutativity squares are listed once, from the smaller index.
        if (through_j && i > j) continue;
        q.relations.push_back({a, i, j, !through_j});
      }
  return q;
}

/// Label of an indecomposable summand M_A of the d-cluster-tilting module of A_n^d.
struct ModuleLabel {
  Tuple tuple;
  bool is_projective = false;
  bool is_injective = false;
};

inline ModuleLabel module_label(const Tuple& a, int n, int d) {
  const int m = n + 2 * d;
  if (a.size() != d + 1) throw Error(ErrorKind::InvalidArity, "module label needs d + 1 entries");
  if (!within(a, m) || !is_separated(a))
    throw Error(ErrorKind::InvalidElement, a.str() + " is not a separated tuple of [" + std::to_string(m) + "]");
  return {a, a.front() == 1, a.back() == m};
}

inline std::vector<ModuleLabel> module_labels(int n, int d) {
  std::vector<ModuleLabel> out;
  for (const auto& a : separated_tuples(n + 2 * d, d)) out.push_back(module_label(a, n, d));
  return out;
}

/// Ext^d(M_B, M_A) is nonzero iff A intertwines B.
inline bool ext_nonzero(const ModuleLabel& a, const ModuleLabel& b) { return intertwines(a.tuple, b.tuple); }

/// Left mutations of a tilting module are exactly the increasing flips.
inline std::vector<EvenTriangulation> left_mutations(const EvenTriangulation& t) {
  std::vector<EvenTriangulation> out;
  for (auto& f : increasing_flips(t)) out.push_back(std::move(f.result));
  return out;
}

enum class Frame { Tilting, Cluster };

inline const char* to_string(Frame f) { return f == Frame::Tilting ? "tilting" : "cluster"; }

/// A maximal chain of mutations from the projectives to the injectives
/// (tilting frame) or to the shifted projectives (cluster frame).
struct TiltingChain {
  int n = 0;
  int d = 0;
  Frame frame = Frame::Tilting;
  std::vector<std::vector<Tuple>> steps;
  std::vector<Tuple> sigma;

  std::size_t mutations() const { return steps.empty() ? 0 : steps.size() - 1; }
  int m() const { return frame == Frame::Tilting ? n + 2 * d : n + 2 * d + 1; }
};

namespace detail {

/// The separated tuples spanning [1, m]: intertwined by nothing, so present in
/// every e-set of C(m, 2d).
inline bool spans(const Tuple& a, int m) { return a.front() == 1 && a.back() == m; }

inline std::vector<Tuple> frame_summands(const std::vector<Tuple>& e, int m, Frame frame) {
  if (frame == Frame::Tilting) return e;
  std::vector<Tuple> out;
  for (const auto& a : e)
    if (!spans(a, m)) out.push_back(a);
  return out;
}

inline std::vector<Tuple> chain_sigma(const std::vector<std::vector<Tuple>>& steps) {
  std::vector<Tuple> all;
  for (const auto& s : steps) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace detail

/// Builds a chain from a list of e-sets of C(m, 2d), checking that each step
/// is a single increasing flip.
inline TiltingChain make_chain(int n, int d, Frame frame, const std::vector<std::vector<Tuple>>& e_sets) {
  TiltingChain c;
  c.n = n;
  c.d = d;
  c.frame = frame;
  const int m = c.m();
  std::vector<EvenTriangulation> tris;
  for (const auto& e : e_sets) tris.push_back(EvenTriangulation::from_tuples(m, d, e));
  if (tris.empty() || !(tris.front() == lower_even(m, d)) || !(tris.back() == upper_even(m, d)))
    throw Error(ErrorKind::NotATriangulation, "chain must run from the lower to the upper triangulation");
  for (std::size_t k = 0; k + 1 < tris.size(); ++k) {
    auto flips = increasing_flips(tris[k]);
    bool ok = std::any_of(flips.begin(), flips.end(), [&](const EvenFlip& f) { return f.result == tris[k + 1]; });
    if (!ok) throw Error(ErrorKind::NotATriangulation, "step " + std::to_string(k) + " is not a left mutation");
  }
  for (const auto& t : tris) c.steps.push_back(detail::frame_summands(t.e_set(), m, frame));
  c.sigma = detail::chain_sigma(c.steps);
  return c;
}

/// Re-expresses a chain for A_{n+1}^d (tilting) as one for A_n^d (cluster), or back.
inline TiltingChain convert_frame(const TiltingChain& c) {
  TiltingChain out = c;
  const int m = c.m();
  if (c.frame == Frame::Tilting) {
    if (c.n < 2) throw Error(ErrorKind::NotApplicable, "tilting chain for A_1 has no cluster counterpart");
    out.frame = Frame::Cluster;
    out.n = c.n - 1;
    for (auto& s : out.steps) s = detail::frame_summands(s, m, Frame::Cluster);
  } else {
    out.frame = Frame::Tilting;
    out.n = c.n + 1;
    std::vector<Tuple> fixed;
    for (const auto& a : separated_tuples(m, c.d))
      if (detail::spans(a, m)) fixed.push_back(a);
    for (auto& s : out.steps) {
      s.insert(s.end(), fixed.begin(), fixed.end());
      std::sort(s.begin(), s.end());
    }
  }
  out.sigma = detail::chain_sigma(out.steps);
  return out;
}

/// Sigma_1 => Sigma_2 for top cells sharing a facet F = Sigma_1 \ {x} = Sigma_2 \ {y}:
/// F is an upper facet of Sigma_1 (x at an even index) and a lower facet of
/// Sigma_2 (y at an odd index).
inline bool cell_precedes(const Tuple& s1, const Tuple& s2) {
  const std::uint64_t shared = s1.mask() & s2.mask();
  if (std::popcount(shared) != s1.size() - 1 || s1.size() != s2.size()) return false;
  const std::uint64_t x = s1.mask() & ~shared;
  const std::uint64_t y = s2.mask() & ~shared;
  const int ix = std::popcount(s1.mask() & (x - 1));
  const int iy = std::popcount(s2.mask() & (y - 1));
  return ix % 2 == 0 && iy % 2 == 1;
}

/// The chain of a triangulation of C(m, 2d+1): its top cells in the
/// lexicographically smallest order compatible with =>, each applied as the
/// exchange (s0, s2, ..., s2d) -> (s1, s3, ..., s2d+1) starting from the
/// lower triangulation of C(m, 2d).
inline TiltingChain chain_from_odd(const OddTriangulation& t, Frame frame = Frame::Tilting) {
  const int m = t.m();
  const int d = t.d();
  if (d < 1) throw Error(ErrorKind::NotApplicable, "chains need d >= 1");
  TiltingChain c;
  c.d = d;
  c.frame = frame;
  c.n = frame == Frame::Tilting ? m - 2 * d : m - 2 * d - 1;
  if (c.n < 1) throw Error(ErrorKind::DegeneratePolytope, "no algebra for this polytope in the chosen frame");

  auto cells = reconstruct_complex(t).top_simplices;
  const std::size_t k = cells.size();
  std::vector<std::vector<std::size_t>> after(k);
  std::vector<std::size_t> indegree(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && cell_precedes(cells[i], cells[j])) {
        after[i].push_back(j);
        ++indegree[j];
      }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;  // cells are sorted
  for (std::size_t i = 0; i < k; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    for (std::size_t j : after[i])
      if (--indegree[j] == 0) ready.push(j);
  }
  if (order.size() != k) throw Error(ErrorKind::InternalConsistency, "cycle among top cells of " + t.str());

  EvenTriangulation cur = lower_even(m, d);
  const auto& universe = cur.space()->universe();
  std::vector<std::vector<Tuple>> steps{detail::frame_summands(cur.e_set(), m, frame)};
  for (std::size_t i : order) {
    auto s = cells[i].entries();
    std::vector<int> lo, hi;
    for (std::size_t p = 0; p < s.size(); ++p) (p % 2 ? hi : lo).push_back(s[p]);
    Tuple a(lo);
    Tuple b(hi);
    auto ia = universe.find(a);
    auto ib = universe.find(b);
    if (!ia || !ib || !cur.bits().test(*ia) || cur.bits().test(*ib))
      throw Error(ErrorKind::InternalConsistency, "cell " + cells[i].str() + " is not an exchange of " + cur.str());
    Bits next = cur.bits();
    next.reset(*ia);
    next.set(*ib);
    EvenTriangulation nt(cur.space(), std::move(next));
    try {
      nt.validate();
    } catch (const Error& e) {
      throw Error(ErrorKind::InternalConsistency, "cell " + cells[i].str() + " gives an invalid step: " + e.what());
    }
    cur = std::move(nt);
    steps.push_back(detail::frame_summands(cur.e_set(), m, frame));
  }
  if (!(cur == upper_even(m, d))) throw Error(ErrorKind::InternalConsistency, "chain of " + t.str() + " misses the top");
  c.steps = std::move(steps);
  c.sigma = detail::chain_sigma(c.steps);
  return c;
}

struct GreenClass {
  OddTriangulation triangulation;
  TiltingChain chain;
};

/// One representative d-maximal green sequence of A_n^d per triangulation of
/// C(n + 2d + 1, 2d + 1), in the canonical order of the triangulations.
inline std::vector<GreenClass> green_sequences(int n, int d, const EnumerateOptions& opts = {}) {
  if (n < 1 || d < 1) throw Error(ErrorKind::InvalidElement, "green sequences need n >= 1 and d >= 1");
  auto p = enumerate(n + 2 * d + 1, 2 * d + 1, opts);
  std::vector<std::optional<TiltingChain>> chains(p.size());
  parallel_for(p.size(), opts.threads, [&](std::size_t i) { chains[i] = chain_from_odd(p.odd_element(i), Frame::Cluster); });
  std::vector<GreenClass> out;
  for (std::size_t i = 0; i < p.size(); ++i) out.push_back({p.odd_element(i), std::move(*chains[i])});
  return out;
}

/// c1 and c2 agree on a common prefix and suffix; in between c1 takes d + 2
/// mutations and c2 takes d + 1, meeting only at the ends.
inline bool polygonal_deformation(const TiltingChain& c1, const TiltingChain& c2) {
  if (c1.n != c2.n || c1.d != c2.d || c1.frame != c2.frame)
    throw Error(ErrorKind::Incompatible, "chains of different algebras");
  const auto& a = c1.steps;
  const auto& b = c2.steps;
  const std::size_t la = a.size();
  const std::size_t lb = b.size();
  std::size_t prefix = 0;
  while (prefix < la && prefix < lb && a[prefix] == b[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < la && suffix < lb && a[la - 1 - suffix] == b[lb - 1 - suffix]) ++suffix;
  if (prefix == 0 || suffix == 0 || prefix + suffix > std::min(la, lb)) return false;
  const std::size_t mid_a = la - prefix - suffix + 1;
  const std::size_t mid_b = lb - prefix - suffix + 1;
  if (mid_a != static_cast<std::size_t>(c1.d + 2) || mid_b != static_cast<std::size_t>(c1.d + 1)) return false;
  for (std::size_t i = prefix; i < la - suffix; ++i)
    for (std::size_t j = prefix; j < lb - suffix; ++j)
      if (a[i] == b[j]) return false;
  return true;
}

}  // namespace stlab
