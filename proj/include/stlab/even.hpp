#pragma once

// Triangulations of even-dimensional cyclic polytopes C(m, 2d), encoded by
// e(T): the separated (d+1)-tuples that are d-simplices of T. A set of
// separated (d+1)-tuples is such an encoding iff it is pairwise
// non-intertwining and has binom(m - d - 1, d) elements.

#include <memory>
#include <string>
#include <vector>

#include "stlab/bits.hpp"
#include "stlab/core.hpp"
#include "stlab/error.hpp"
#include "stlab/universe.hpp"

namespace stlab {

/// Tables shared by every triangulation of C(m, 2d).
class EvenSpace {
 public:
  EvenSpace(int m, int d) : m_(m), d_(d) {
    check_vertex_count(m);
    if (d < 1) throw Error(ErrorKind::DegeneratePolytope, "even dimension 2d needs d >= 1");
    if (m < 2 * d + 1)
      throw Error(ErrorKind::DegeneratePolytope,
                  "C(" + std::to_string(m) + "," + std::to_string(2 * d) + ") needs at least 2d + 1 vertices");
    universe_ = TupleUniverse(separated_tuples(m, d));
    const std::size_t k = universe_.size();
    below_.assign(k, Bits(k));
    crossing_.assign(k, Bits(k));
    above_list_.assign(k, {});
    internal_ = Bits(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (is_cyclically_separated(universe_[i], m)) internal_.set(i);
      for (std::size_t j = 0; j < k; ++j) {
        if (intertwines(universe_[j], universe_[i])) {
          below_[i].set(j);
          crossing_[i].set(j);
        }
        if (intertwines(universe_[i], universe_[j])) {
          crossing_[i].set(j);
          above_list_[i].push_back(j);
        }
      }
    }
    const int n = m - 2 * d;
    expected_size_ = binomial(n + d - 1, d);
  }

  static std::shared_ptr<const EvenSpace> get(int m, int d) { return detail::cached_space<EvenSpace>(m, d); }

  int m() const noexcept { return m_; }
  int d() const noexcept { return d_; }
  const TupleUniverse& universe() const noexcept { return universe_; }
  std::size_t expected_size() const noexcept { return expected_size_; }

  /// Indices j with tuple j intertwining tuple i (j wr i).
  const Bits& intertwined_by(std::size_t i) const noexcept { return below_[i]; }
  /// Indices j with i wr j or j wr i.
  const Bits& crossing(std::size_t i) const noexcept { return crossing_[i]; }
  /// Indices j with i wr j, ascending.
  const std::vector<std::size_t>& intertwining_targets(std::size_t i) const noexcept { return above_list_[i]; }
  /// Separated tuples that are internal d-simplices of C(m, 2d).
  const Bits& internal() const noexcept { return internal_; }

 private:
  int m_;
  int d_;
  TupleUniverse universe_;
  std::vector<Bits> below_;
  std::vector<Bits> crossing_;
  std::vector<std::vector<std::size_t>> above_list_;
  Bits internal_;
  std::size_t expected_size_ = 0;
};

/// A triangulation of C(m, 2d) held as its e-set over EvenSpace(m, d).
class EvenTriangulation {
 public:
  EvenTriangulation(std::shared_ptr<const EvenSpace> space, Bits e) : space_(std::move(space)), e_(std::move(e)) {}

  /// Validates a tuple list against the three invariants.
  static EvenTriangulation from_tuples(int m, int d, const std::vector<Tuple>& e_set) {
    auto space = EvenSpace::get(m, d);
    Bits bits = space->universe().empty_set();
    for (const auto& t : e_set) {
      if (t.size() != d + 1)
        throw Error(ErrorKind::InvalidArity, "e-set tuple " + t.str() + " must have d + 1 = " + std::to_string(d + 1) + " entries");
      auto idx = space->universe().find(t);
      if (!idx) throw Error(ErrorKind::NotATriangulation, "tuple " + t.str() + " is not a separated tuple of [" + std::to_string(m) + "]");
      bits.set(*idx);
    }
    EvenTriangulation tri(std::move(space), std::move(bits));
    tri.validate();
    return tri;
  }

  const std::shared_ptr<const EvenSpace>& space() const noexcept { return space_; }
  int m() const noexcept { return space_->m(); }
  int d() const noexcept { return space_->d(); }
  const Bits& bits() const noexcept { return e_; }
  std::vector<Tuple> e_set() const { return space_->universe().decode(e_); }

  bool contains(const Tuple& t) const {
    auto idx = space_->universe().find(t);
    return idx && e_.test(*idx);
  }

  void validate() const {
    if (e_.count() != space_->expected_size())
      throw Error(ErrorKind::NotATriangulation, "e-set has " + std::to_string(e_.count()) + " tuples, expected " +
                                                    std::to_string(space_->expected_size()));
    std::string bad;
    e_.for_each([&](std::size_t i) {
      if (bad.empty() && space_->crossing(i).intersects(e_)) {
        std::size_t j = (space_->crossing(i) & e_).first();
        bad = space_->universe()[i].str() + " and " + space_->universe()[j].str() + " intertwine";
      }
    });
    if (!bad.empty()) throw Error(ErrorKind::NotATriangulation, bad);
  }

  std::string str() const { return join_tuples(e_set()); }

  friend bool operator==(const EvenTriangulation& a, const EvenTriangulation& b) {
    return a.m() == b.m() && a.d() == b.d() && a.e_ == b.e_;
  }
  /// Lexicographic on the sorted tuple lists.
  friend bool operator<(const EvenTriangulation& a, const EvenTriangulation& b) { return lex_less(a.e_, b.e_); }

 private:
  std::shared_ptr<const EvenSpace> space_;
  Bits e_;
};

inline void check_same_polytope(const EvenTriangulation& a, const EvenTriangulation& b) {
  if (a.m() != b.m() || a.d() != b.d())
    throw Error(ErrorKind::Incompatible, "triangulations of C(" + std::to_string(a.m()) + "," + std::to_string(2 * a.d()) +
                                             ") and C(" + std::to_string(b.m()) + "," + std::to_string(2 * b.d()) + ")");
}

/// e(T) from the top-dimensional cells: every separated (d+1)-subtuple of a
/// (2d+1)-simplex of T.
inline EvenTriangulation e_from_full(const std::vector<Tuple>& simplices, int m, int d) {
  auto space = EvenSpace::get(m, d);
  Bits bits = space->universe().empty_set();
  for (const auto& s : simplices) {
    if (s.size() != 2 * d + 1)
      throw Error(ErrorKind::InvalidArity, "simplex " + s.str() + " of C(m,2d) needs 2d + 1 vertices");
    if (!within(s, m)) throw Error(ErrorKind::InvalidElement, "simplex " + s.str() + " leaves [1," + std::to_string(m) + "]");
    for_each_subset_of(s.mask(), d + 1, [&](Tuple t) {
      if (is_separated(t)) bits.set(*space->universe().find(t));
    });
  }
  EvenTriangulation tri(std::move(space), std::move(bits));
  tri.validate();
  return tri;
}

/// The (2d+1)-subsets of [m] all of whose separated (d+1)-subtuples lie in e(T).
inline std::vector<Tuple> full_from_e(const EvenTriangulation& t) {
  const auto& space = *t.space();
  const int d = t.d();
  std::vector<Tuple> out;
  for_each_subset(t.m(), 2 * d + 1, [&](Tuple s) {
    bool ok = true;
    for_each_subset_of(s.mask(), d + 1, [&](Tuple sub) {
      if (ok && is_separated(sub) && !t.bits().test(*space.universe().find(sub))) ok = false;
    });
    if (ok) out.push_back(s);
  });
  return out;
}

inline EvenTriangulation lower_even(int m, int d) { return e_from_full(lower_triangulation(m, 2 * d), m, d); }
inline EvenTriangulation upper_even(int m, int d) { return e_from_full(upper_triangulation(m, 2 * d), m, d); }

struct EvenFlip {
  Tuple removed;  // A
  Tuple added;    // B, with A wr B
  EvenTriangulation result;
};

/// Every cover of T in the first order: exchange A in e(T) for a separated B
/// with A wr B such that the new set stays non-intertwining. Sorted by (A, B).
inline std::vector<EvenFlip> increasing_flips(const EvenTriangulation& t) {
  const auto& space = *t.space();
  std::vector<EvenFlip> out;
  t.bits().for_each([&](std::size_t a) {
    Bits rest = t.bits();
    rest.reset(a);
    for (std::size_t b : space.intertwining_targets(a)) {
      if (rest.test(b) || space.crossing(b).intersects(rest)) continue;
      Bits next = rest;
      next.set(b);
      out.push_back({space.universe()[a], space.universe()[b], EvenTriangulation(t.space(), std::move(next))});
    }
  });
  return out;
}

/// Second order: T <=_2 T' iff no B in e(T') intertwines any A in e(T).
inline bool leq2(const EvenTriangulation& t, const EvenTriangulation& t2) {
  check_same_polytope(t, t2);
  const auto& space = *t.space();
  bool ok = true;
  t.bits().for_each([&](std::size_t a) {
    if (ok && space.intertwined_by(a).intersects(t2.bits())) ok = false;
  });
  return ok;
}

/// Separated tuples A (boundary ones included) with no B in e(T) such that
/// B wr A, as Bits over the EvenSpace universe. T <=_2 T' iff e(T) is a
/// subset of submerged_mask(T').
inline Bits submerged_mask(const EvenTriangulation& t) {
  const auto& space = *t.space();
  Bits out = space.universe().empty_set();
  for (std::size_t i = 0; i < space.universe().size(); ++i)
    if (!space.intertwined_by(i).intersects(t.bits())) out.set(i);
  return out;
}

/// Internal d-simplices submerged by T.
inline std::vector<Tuple> submersion_set(const EvenTriangulation& t) {
  return t.space()->universe().decode(submerged_mask(t) & t.space()->internal());
}

/// Vertex reversal i -> m + 1 - i.
inline EvenTriangulation reverse(const EvenTriangulation& t) {
  const auto& space = *t.space();
  Bits out = space.universe().empty_set();
  t.bits().for_each([&](std::size_t i) { out.set(*space.universe().find(reverse_tuple(space.universe()[i], t.m()))); });
  return EvenTriangulation(t.space(), std::move(out));
}

/// Ground set of the even Boolean embedding: separated (d+1)-tuples of [2, m],
/// i.e. the odd-internal tuples of [m + 1].
inline std::vector<Tuple> embedding_ground_even(int m, int d) {
  std::vector<Tuple> out;
  for (const auto& a : separated_tuples(m, d))
    if (is_internal_odd(a, m + 1)) out.push_back(a);
  return out;
}

/// Submersion set restricted to the embedding ground set; injective and
/// order-preserving from the second order into inclusion.
inline std::vector<Tuple> boolean_embedding_even(const EvenTriangulation& t) {
  std::vector<Tuple> out;
  for (const auto& a : submersion_set(t))
    if (is_internal_odd(a, t.m() + 1)) out.push_back(a);
  return out;
}

}  // namespace stlab
