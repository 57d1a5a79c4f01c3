#pragma once

// Triangulations of odd-dimensional cyclic polytopes C(m, 2d+1), encoded by
// their internal d-simplices. A subset of the internal tuples (separated,
// a_0 != 1, a_d != m) encodes a triangulation iff it is supporting and
// bridging.

#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "stlab/bits.hpp"
#include "stlab/core.hpp"
#include "stlab/error.hpp"
#include "stlab/universe.hpp"

namespace stlab {

/// Closure data for one ordered pair (A, B) that agree outside a window on
/// which A's entries intertwine B's: every interpolant strictly between them.
struct BridgeRule {
  std::size_t a;
  std::size_t b;
  Bits required;
};

class OddSpace {
 public:
  OddSpace(int m, int d) : m_(m), d_(d) {
    check_vertex_count(m);
    if (d < 0) throw Error(ErrorKind::DegeneratePolytope, "odd dimension 2d+1 needs d >= 0");
    if (m < 2 * d + 2)
      throw Error(ErrorKind::DegeneratePolytope,
                  "C(" + std::to_string(m) + "," + std::to_string(2 * d + 1) + ") needs at least 2d + 2 vertices");
    universe_ = TupleUniverse(internal_odd_tuples(m, d));
    build_support_options();
    build_bridges();
  }

  static std::shared_ptr<const OddSpace> get(int m, int d) { return detail::cached_space<OddSpace>(m, d); }

  int m() const noexcept { return m_; }
  int d() const noexcept { return d_; }
  const TupleUniverse& universe() const noexcept { return universe_; }

  /// For tuple i, one requirement set per admissible A' (A' wr A): the
  /// internal (d+1)-subtuples of A u A'.
  const std::vector<Bits>& support_options(std::size_t i) const noexcept { return support_[i]; }
  const std::vector<BridgeRule>& bridges() const noexcept { return bridges_; }

  Bits encode(const std::vector<Tuple>& tuples) const {
    Bits out = universe_.empty_set();
    for (const auto& t : tuples) {
      if (t.size() != d_ + 1)
        throw Error(ErrorKind::InvalidArity, "tuple " + t.str() + " must have d + 1 = " + std::to_string(d_ + 1) + " entries");
      auto idx = universe_.find(t);
      if (!idx)
        throw Error(ErrorKind::InvalidElement, "tuple " + t.str() + " is not an internal d-simplex of C(" + std::to_string(m_) +
                                                   "," + std::to_string(2 * d_ + 1) + ")");
      out.set(*idx);
    }
    return out;
  }

  /// Index of the first tuple of x with no satisfied support option.
  std::optional<std::size_t> unsupported(const Bits& x) const {
    std::optional<std::size_t> bad;
    x.for_each([&](std::size_t i) {
      if (bad) return;
      bool ok = false;
      for (const auto& req : support_[i])
        if (req.is_subset_of(x)) {
          ok = true;
          break;
        }
      if (!ok) bad = i;
    });
    return bad;
  }

  /// First bridge rule violated by x.
  const BridgeRule* unbridged(const Bits& x) const {
    for (const auto& rule : bridges_)
      if (x.test(rule.a) && x.test(rule.b) && !rule.required.is_subset_of(x)) return &rule;
    return nullptr;
  }

  bool valid(const Bits& x) const { return !unsupported(x) && !unbridged(x); }

 private:
  void build_support_options() {
    const std::size_t k = universe_.size();
    support_.assign(k, {});
    for (std::size_t i = 0; i < k; ++i) {
      const Tuple& a = universe_[i];
      // A' has one entry strictly inside each gap (a_j, a_{j+1}).
      std::vector<int> pick(static_cast<std::size_t>(d_));
      for (int j = 0; j < d_; ++j) pick[static_cast<std::size_t>(j)] = a[j] + 1;
      while (true) {
        std::uint64_t mask = a.mask();
        for (int v : pick) mask |= Tuple::bit(v);
        Bits req = universe_.empty_set();
        for_each_subset_of(mask, d_ + 1, [&](Tuple b) {
          if (auto idx = universe_.find(b)) req.set(*idx);
        });
        if (std::find(support_[i].begin(), support_[i].end(), req) == support_[i].end()) support_[i].push_back(std::move(req));
        int j = d_ - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] + 1 >= a[j + 1]) {
          pick[static_cast<std::size_t>(j)] = a[j] + 1;
          --j;
        }
        if (j < 0) break;
        ++pick[static_cast<std::size_t>(j)];
      }
    }
  }

  void build_bridges() {
    const std::size_t k = universe_.size();
    for (std::size_t ia = 0; ia < k; ++ia) {
      auto a = universe_[ia].entries();
      for (std::size_t ib = 0; ib < k; ++ib) {
        if (ia == ib) continue;
        auto b = universe_[ib].entries();
        const int n = d_ + 1;
        int lo = 0;
        while (lo < n && a[static_cast<std::size_t>(lo)] == b[static_cast<std::size_t>(lo)]) ++lo;
        int hi = n - 1;
        while (hi >= 0 && a[static_cast<std::size_t>(hi)] == b[static_cast<std::size_t>(hi)]) --hi;
        if (lo >= hi) continue;  // windows of width one need no interpolant
        bool interleaved = true;
        for (int t = lo; t <= hi && interleaved; ++t) {
          if (!(a[static_cast<std::size_t>(t)] < b[static_cast<std::size_t>(t)])) interleaved = false;
          if (t < hi && !(b[static_cast<std::size_t>(t)] < a[static_cast<std::size_t>(t + 1)])) interleaved = false;
        }
        if (!interleaved) continue;
        Bits req = universe_.empty_set();
        for (int cut = lo + 1; cut <= hi; ++cut) {
          std::vector<int> s = a;
          for (int t = cut; t <= hi; ++t) s[static_cast<std::size_t>(t)] = b[static_cast<std::size_t>(t)];
          auto idx = universe_.find(Tuple(s));
          if (!idx) throw Error(ErrorKind::InternalConsistency, "interpolant left the internal tuples");
          req.set(*idx);
        }
        bridges_.push_back({ia, ib, std::move(req)});
      }
    }
  }

  int m_;
  int d_;
  TupleUniverse universe_;
  std::vector<std::vector<Bits>> support_;
  std::vector<BridgeRule> bridges_;
};

class OddTriangulation {
 public:
  OddTriangulation(std::shared_ptr<const OddSpace> space, Bits x) : space_(std::move(space)), x_(std::move(x)) {}

  const std::shared_ptr<const OddSpace>& space() const noexcept { return space_; }
  int m() const noexcept { return space_->m(); }
  int d() const noexcept { return space_->d(); }
  const Bits& bits() const noexcept { return x_; }
  std::vector<Tuple> internal_set() const { return space_->universe().decode(x_); }

  bool contains(const Tuple& t) const {
    auto idx = space_->universe().find(t);
    return idx && x_.test(*idx);
  }

  std::string str() const { return join_tuples(internal_set()); }

  friend bool operator==(const OddTriangulation& a, const OddTriangulation& b) {
    return a.m() == b.m() && a.d() == b.d() && a.x_ == b.x_;
  }
  friend bool operator<(const OddTriangulation& a, const OddTriangulation& b) { return lex_less(a.x_, b.x_); }

 private:
  std::shared_ptr<const OddSpace> space_;
  Bits x_;
};

inline void check_same_polytope(const OddTriangulation& a, const OddTriangulation& b) {
  if (a.m() != b.m() || a.d() != b.d())
    throw Error(ErrorKind::Incompatible, "triangulations of C(" + std::to_string(a.m()) + "," + std::to_string(2 * a.d() + 1) +
                                             ") and C(" + std::to_string(b.m()) + "," + std::to_string(2 * b.d() + 1) + ")");
}

inline bool is_supporting(const std::vector<Tuple>& x, int m, int d) {
  auto space = OddSpace::get(m, d);
  return !space->unsupported(space->encode(x));
}

inline bool is_bridging(const std::vector<Tuple>& x, int m, int d) {
  auto space = OddSpace::get(m, d);
  return space->unbridged(space->encode(x)) == nullptr;
}

/// Typed triangulation from an internal-simplex set; throws
/// not-a-triangulation naming the failed property and a witness.
inline OddTriangulation validate_odd(const std::vector<Tuple>& x, int m, int d) {
  auto space = OddSpace::get(m, d);
  Bits bits = space->universe().empty_set();
  for (const auto& t : x) {
    auto idx = space->universe().find(t);
    if (t.size() != d + 1 || !idx)
      throw Error(ErrorKind::NotATriangulation, "tuple " + t.str() + " is not an internal d-simplex");
    bits.set(*idx);
  }
  if (auto bad = space->unsupported(bits))
    throw Error(ErrorKind::NotATriangulation, "not supporting at " + space->universe()[*bad].str());
  if (const BridgeRule* rule = space->unbridged(bits)) {
    std::size_t missing = (rule->required - bits).first();
    throw Error(ErrorKind::NotATriangulation, "not bridging: " + space->universe()[rule->a].str() + " and " +
                                                  space->universe()[rule->b].str() + " need " + space->universe()[missing].str());
  }
  return OddTriangulation(std::move(space), std::move(bits));
}

/// Lower triangulation: every internal d-simplex.
inline OddTriangulation lower_odd(int m, int d) {
  auto space = OddSpace::get(m, d);
  Bits all = space->universe().full_set();
  return OddTriangulation(std::move(space), std::move(all));
}

/// Upper triangulation: no internal d-simplex.
inline OddTriangulation upper_odd(int m, int d) {
  auto space = OddSpace::get(m, d);
  Bits none = space->universe().empty_set();
  return OddTriangulation(std::move(space), std::move(none));
}

struct OddFlip {
  Tuple removed;
  OddTriangulation result;
};

/// Covers in the first order: remove one internal simplex, keeping the set
/// supporting and bridging. Sorted by the removed tuple.
inline std::vector<OddFlip> increasing_flips_odd(const OddTriangulation& t) {
  const auto& space = *t.space();
  std::vector<OddFlip> out;
  t.bits().for_each([&](std::size_t i) {
    Bits next = t.bits();
    next.reset(i);
    if (space.valid(next)) out.push_back({space.universe()[i], OddTriangulation(t.space(), std::move(next))});
  });
  return out;
}

/// Second order: reverse inclusion of internal simplex sets.
inline bool leq2_odd(const OddTriangulation& t, const OddTriangulation& t2) {
  check_same_polytope(t, t2);
  return t2.bits().is_subset_of(t.bits());
}

struct OddComplex {
  std::vector<Tuple> next_simplices;  // (d+2)-tuples: the (d+1)-simplices
  std::vector<Tuple> top_simplices;   // (2d+2)-tuples
};

/// Rebuilds the (d+1)-simplices and the top cells from the internal
/// d-simplices.
inline OddComplex reconstruct_complex(const OddTriangulation& t) {
  const auto& space = *t.space();
  const int m = t.m();
  const int d = t.d();
  const auto x = t.internal_set();
  OddComplex out;
  std::unordered_set<std::uint64_t> good;
  for_each_subset(m, d + 2, [&](Tuple c) {
    bool ok = true;
    for_each_subset_of(c.mask(), d + 1, [&](Tuple f) {
      if (!ok) return;
      auto idx = space.universe().find(f);
      if (idx && !t.bits().test(*idx)) ok = false;
    });
    for (std::size_t k = 0; ok && k < x.size(); ++k)
      if (intertwines(x[k], c)) ok = false;
    if (ok) {
      out.next_simplices.push_back(c);
      good.insert(c.mask());
    }
  });
  if (2 * d + 2 == d + 2) {
    out.top_simplices = out.next_simplices;
    return out;
  }
  for_each_subset(m, 2 * d + 2, [&](Tuple s) {
    bool ok = true;
    for_each_subset_of(s.mask(), d + 2, [&](Tuple c) {
      if (ok && !good.count(c.mask())) ok = false;
    });
    if (ok) out.top_simplices.push_back(s);
  });
  return out;
}

/// X/1 = {A in X : a_0 != 2}, relabelled by v -> v - 1 so that it lives in
/// the internal tuples of C(m - 1, 2d + 1).
inline std::vector<Tuple> contract(const std::vector<Tuple>& x, int m, int d) {
  if (m - 1 < 2 * d + 2) throw Error(ErrorKind::DegeneratePolytope, "contraction leaves fewer than 2d + 2 vertices");
  std::vector<Tuple> out;
  for (const auto& a : x) {
    if (a.size() != d + 1) throw Error(ErrorKind::InvalidArity, "tuple " + a.str() + " must have d + 1 entries");
    if (a.front() != 2) out.push_back(a.shifted(-1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// X\{1,2} = {(a_1, ..., a_d) : (2, a_1, ..., a_d) in X}, relabelled by
/// v -> v - 2 so that it lives in the internal tuples of C(m - 2, 2d - 1).
inline std::vector<Tuple> delete12(const std::vector<Tuple>& x, int m, int d) {
  if (d < 1) throw Error(ErrorKind::DegeneratePolytope, "vertex figure of C(m,1) has negative dimension");
  if (m - 2 < 2 * d) throw Error(ErrorKind::DegeneratePolytope, "deletion leaves fewer than 2d vertices");
  std::vector<Tuple> out;
  for (const auto& a : x) {
    if (a.size() != d + 1) throw Error(ErrorKind::InvalidArity, "tuple " + a.str() + " must have d + 1 entries");
    if (a.front() == 2) out.push_back(a.without(2).shifted(-2));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// v * A = {v} u A for every A in X.
inline std::vector<Tuple> star(int v, const std::vector<Tuple>& x) {
  if (v < 1 || v > kMaxVertices) throw Error(ErrorKind::InvalidElement, "vertex out of range");
  std::vector<Tuple> out;
  for (const auto& a : x) {
    if (a.contains(v)) throw Error(ErrorKind::DuplicateVertex, std::to_string(v) + " already lies in " + a.str());
    out.push_back(a.with(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Tuple star(int v, const Tuple& a) {
  if (a.contains(v)) throw Error(ErrorKind::DuplicateVertex, std::to_string(v) + " already lies in " + a.str());
  return a.with(v);
}

/// Ground set of the odd Boolean embedding: all internal tuples.
inline std::vector<Tuple> embedding_ground_odd(int m, int d) { return internal_odd_tuples(m, d); }

/// The embedding is the internal simplex set itself; it reverses the second
/// order into inclusion.
inline std::vector<Tuple> boolean_embedding_odd(const OddTriangulation& t) { return t.internal_set(); }

}  // namespace stlab
