#pragma once

// Tuple arithmetic on the vertex set [m] = {1, ..., m} of a cyclic polytope
// C(m, delta): intertwining, separation classes, Gale evenness, circuits and
// the canonical lower/upper triangulations.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "stlab/error.hpp"

namespace stlab {

inline constexpr int kMaxVertices = 64;

/// A strictly increasing tuple of vertices in [1, 64], stored as a bit mask
/// (vertex v occupies bit v - 1). Ordering is lexicographic on the sorted
/// entries, so (1,3) < (1,3,5) < (1,4).
class Tuple {
 public:
  Tuple() = default;

  Tuple(std::initializer_list<int> entries) : Tuple(std::span<const int>(entries.begin(), entries.size())) {}

  explicit Tuple(std::span<const int> entries) {
    int prev = 0;
    for (int v : entries) {
      if (v <= prev || v > kMaxVertices)
        throw Error(ErrorKind::InvalidElement, "tuple entries must be strictly increasing within [1,64]");
      mask_ |= bit(v);
      prev = v;
    }
  }

  explicit Tuple(const std::vector<int>& entries) : Tuple(std::span<const int>(entries)) {}

  static Tuple from_mask(std::uint64_t mask) {
    Tuple t;
    t.mask_ = mask;
    return t;
  }

  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

  std::uint64_t mask() const noexcept { return mask_; }
  int size() const noexcept { return std::popcount(mask_); }
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(int v) const noexcept { return v >= 1 && v <= kMaxVertices && (mask_ & bit(v)); }

  int front() const noexcept { return std::countr_zero(mask_) + 1; }
  int back() const noexcept { return kMaxVertices - std::countl_zero(mask_); }

  /// The i-th smallest entry (0-based), i.e. a_i.
  int operator[](int i) const noexcept {
    std::uint64_t m = mask_;
    for (; i > 0; --i) m &= m - 1;
    return std::countr_zero(m) + 1;
  }

  std::vector<int> entries() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  Tuple with(int v) const { return from_mask(mask_ | bit(v)); }
  Tuple without(int v) const { return from_mask(mask_ & ~bit(v)); }

  /// Shift every entry by `delta` (used for relabelling sub-polytopes).
  Tuple shifted(int delta) const {
    return delta >= 0 ? from_mask(mask_ << delta) : from_mask(mask_ >> (-delta));
  }

  friend bool operator==(const Tuple& a, const Tuple& b) noexcept { return a.mask_ == b.mask_; }

  friend std::strong_ordering operator<=>(const Tuple& a, const Tuple& b) noexcept {
    std::uint64_t diff = a.mask_ ^ b.mask_;
    if (!diff) return std::strong_ordering::equal;
    std::uint64_t low = diff & (~diff + 1);
    bool in_a = (a.mask_ & low) != 0;
    std::uint64_t other = in_a ? b.mask_ : a.mask_;
    bool other_continues = (other & ~((low << 1) - 1)) != 0;
    bool a_less = in_a ? other_continues : !other_continues;
    return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  /// Compact label: "135" when every entry is a single digit, "1.3.10" otherwise.
  std::string str() const {
    auto e = entries();
    bool compact = std::all_of(e.begin(), e.end(), [](int v) { return v < 10; });
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!compact && i) s += '.';
      s += std::to_string(e[i]);
    }
    return s;
  }

 private:
  std::uint64_t mask_ = 0;
};

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept { return std::hash<std::uint64_t>{}(t.mask()); }
};

inline std::uint64_t range_mask(int lo, int hi) {
  if (hi < lo) return 0;
  std::uint64_t upto_hi = hi >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
  std::uint64_t below_lo = (std::uint64_t{1} << (lo - 1)) - 1;
  return upto_hi & ~below_lo;
}

inline void check_vertex_count(int m) {
  if (m < 1 || m > kMaxVertices)
    throw Error(ErrorKind::InvalidElement, "vertex count must lie in [1,64], got " + std::to_string(m));
}

inline bool within(const Tuple& t, int m) { return (t.mask() & ~range_mask(1, m)) == 0; }

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Calls f(Tuple) for every k-subset of the vertex mask `ground`, in
/// lexicographic order.
template <class F>
void for_each_subset_of(std::uint64_t ground, int k, F&& f) {
  std::vector<int> pool;
  for (std::uint64_t g = ground; g; g &= g - 1) pool.push_back(std::countr_zero(g) + 1);
  const int n = static_cast<int>(pool.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Tuple{});
    return;
  }
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx) mask |= Tuple::bit(pool[static_cast<std::size_t>(i)]);
    f(Tuple::from_mask(mask));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

template <class F>
void for_each_subset(int m, int k, F&& f) {
  for_each_subset_of(range_mask(1, m), k, std::forward<F>(f));
}

inline std::vector<Tuple> subsets(int m, int k) {
  std::vector<Tuple> out;
  for_each_subset(m, k, [&](Tuple t) { out.push_back(t); });
  return out;
}

inline std::vector<Tuple> subtuples(const Tuple& a, int k) {
  std::vector<Tuple> out;
  for_each_subset_of(a.mask(), k, [&](Tuple t) { out.push_back(t); });
  return out;
}

// ---------------------------------------------------------------------------
// Separation classes

/// a_{i+1} >= a_i + 2 for all i.
inline bool is_separated(const Tuple& a) noexcept { return (a.mask() & (a.mask() >> 1)) == 0; }

/// Separated and a_d + 2 <= a_0 + m (no cyclic neighbours either).
inline bool is_cyclically_separated(const Tuple& a, int m) noexcept {
  return is_separated(a) && !a.empty() && a.back() + 2 <= a.front() + m;
}

/// Separated with a_0 != 1 and a_d != m: the internal d-simplices of C(m, 2d+1).
inline bool is_internal_odd(const Tuple& a, int m) noexcept {
  return is_separated(a) && !a.empty() && a.front() != 1 && a.back() != m;
}

struct TupleClass {
  bool separated = false;
  bool cyclically_separated = false;
  bool internal_odd = false;
  friend bool operator==(const TupleClass&, const TupleClass&) = default;
};

inline TupleClass classify(const Tuple& a, int m) {
  if (!within(a, m)) throw Error(ErrorKind::InvalidElement, "tuple " + a.str() + " leaves [1," + std::to_string(m) + "]");
  return {is_separated(a), is_cyclically_separated(a, m), is_internal_odd(a, m)};
}

/// All separated (d+1)-subsets of [m], lexicographically.
inline std::vector<Tuple> separated_tuples(int m, int d) {
  std::vector<Tuple> out;
  for_each_subset(m, d + 1, [&](Tuple t) {
    if (is_separated(t)) out.push_back(t);
  });
  return out;
}

inline std::vector<Tuple> cyclically_separated_tuples(int m, int d) {
  std::vector<Tuple> out;
  for (const auto& t : separated_tuples(m, d))
    if (is_cyclically_separated(t, m)) out.push_back(t);
  return out;
}

inline std::vector<Tuple> internal_odd_tuples(int m, int d) {
  std::vector<Tuple> out;
  for (const auto& t : separated_tuples(m, d))
    if (is_internal_odd(t, m)) out.push_back(t);
  return out;
}

// ---------------------------------------------------------------------------
// Intertwining

/// A intertwines B. Equal sizes: a0 < b0 < a1 < ... < ad < bd.
/// |A| = |B| - 1: b0 < a0 < b1 < ... < a_{d-1} < b_d.
inline bool intertwines(const Tuple& a, const Tuple& b) {
  const int sa = a.size();
  const int sb = b.size();
  if (sa != sb && sa != sb - 1)
    throw Error(ErrorKind::InvalidArity,
                "intertwining needs |A| = |B| or |A| = |B| - 1, got " + std::to_string(sa) + " and " + std::to_string(sb));
  if (a.mask() & b.mask()) return false;
  // Walk the merged vertex sequence; membership must alternate with the
  // stated starting side.
  std::uint64_t all = a.mask() | b.mask();
  bool expect_a = (sa == sb);
  for (; all; all &= all - 1) {
    std::uint64_t low = all & (~all + 1);
    bool is_a = (a.mask() & low) != 0;
    if (is_a != expect_a) return false;
    expect_a = !expect_a;
  }
  return true;
}

/// Either A intertwines B or B intertwines A (equal sizes only).
inline bool are_intertwining(const Tuple& a, const Tuple& b) { return intertwines(a, b) || intertwines(b, a); }

// ---------------------------------------------------------------------------
// Gale evenness

enum class FacetKind { Lower, Upper, NotFacet };

inline const char* to_string(FacetKind k) {
  switch (k) {
    case FacetKind::Lower: return "lower";
    case FacetKind::Upper: return "upper";
    case FacetKind::NotFacet: return "not-facet";
  }
  return "?";
}

/// Classifies a delta-subset F of [m] as a lower facet (every gap even),
/// upper facet (every gap odd) or neither, where the gap count of v is
/// #{x in F : x > v}.
inline FacetKind facet_kind(const Tuple& f, int m, int delta) {
  check_vertex_count(m);
  if (f.size() != delta)
    throw Error(ErrorKind::InvalidArity, "facet test needs |F| = " + std::to_string(delta) + ", got " + std::to_string(f.size()));
  if (!within(f, m)) throw Error(ErrorKind::InvalidElement, "tuple " + f.str() + " leaves [1," + std::to_string(m) + "]");
  bool all_even = true;
  bool all_odd = true;
  std::uint64_t gaps = range_mask(1, m) & ~f.mask();
  for (; gaps; gaps &= gaps - 1) {
    int v = std::countr_zero(gaps) + 1;
    std::uint64_t above = f.mask() & ~range_mask(1, v);
    bool odd = std::popcount(above) & 1;
    all_even = all_even && !odd;
    all_odd = all_odd && odd;
  }
  if (all_even) return FacetKind::Lower;
  if (all_odd) return FacetKind::Upper;
  return FacetKind::NotFacet;
}

namespace detail {
inline std::vector<Tuple> facet_triangulation(int m, int delta, FacetKind want) {
  check_vertex_count(m);
  if (delta < 1) throw Error(ErrorKind::DegeneratePolytope, "dimension must be positive");
  if (m <= delta)
    throw Error(ErrorKind::DegeneratePolytope,
                "C(" + std::to_string(m) + "," + std::to_string(delta) + ") needs at least delta + 1 vertices");
  std::vector<Tuple> out;
  if (m == delta + 1) {
    // C(m, delta+1) is not defined here; a simplex triangulates itself.
    out.push_back(Tuple::from_mask(range_mask(1, m)));
    return out;
  }
  for_each_subset(m, delta + 1, [&](Tuple f) {
    if (facet_kind(f, m, delta + 1) == want) out.push_back(f);
  });
  return out;
}
}  // namespace detail

/// delta-simplices of the lower triangulation of C(m, delta), i.e. the even
/// (delta+1)-subsets of [m].
inline std::vector<Tuple> lower_triangulation(int m, int delta) {
  return detail::facet_triangulation(m, delta, FacetKind::Lower);
}

inline std::vector<Tuple> upper_triangulation(int m, int delta) {
  return detail::facet_triangulation(m, delta, FacetKind::Upper);
}

/// Lower triangulation of C(X, delta) for an arbitrary vertex set X with
/// |X| = delta + 2: the simplex X \ {x_i} belongs to it iff delta + 1 - i is
/// even.
inline std::vector<Tuple> lower_triangulation_of(const Tuple& x) {
  std::vector<Tuple> out;
  const int n = x.size();
  for (int i = 0; i < n; ++i)
    if ((n - 1 - i) % 2 == 0) out.push_back(x.without(x[i]));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Tuple> upper_triangulation_of(const Tuple& x) {
  std::vector<Tuple> out;
  const int n = x.size();
  for (int i = 0; i < n; ++i)
    if ((n - 1 - i) % 2 == 1) out.push_back(x.without(x[i]));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Circuits

struct Circuit {
  Tuple positive;  // floor(delta/2) + 1 vertices
  Tuple negative;  // ceil(delta/2) + 1 vertices
  int delta = 0;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// One representative (A, B) per circuit of C(m, delta) with A intertwining B,
/// sorted lexicographically by (A, B). The reverse pair (B, A) is the same
/// circuit with signs swapped.
inline std::vector<Circuit> circuits(int m, int delta) {
  check_vertex_count(m);
  if (delta < 1) throw Error(ErrorKind::DegeneratePolytope, "dimension must be positive");
  std::vector<Circuit> out;
  const int ka = delta / 2 + 1;
  const int kb = (delta + 1) / 2 + 1;
  if (ka + kb > m) return out;
  auto as = subsets(m, ka);
  auto bs = subsets(m, kb);
  for (const auto& a : as)
    for (const auto& b : bs)
      if (intertwines(a, b)) out.push_back({a, b, delta});
  return out;
}

/// Vertex reversal i -> m + 1 - i.
inline Tuple reverse_tuple(const Tuple& a, int m) {
  std::uint64_t out = 0;
  for (std::uint64_t g = a.mask(); g; g &= g - 1) out |= Tuple::bit(m - std::countr_zero(g));
  return Tuple::from_mask(out);
}

inline std::string join_tuples(const std::vector<Tuple>& ts) {
  std::string s = "{";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i) s += ',';
    s += ts[i].str();
  }
  return s + "}";
}

}  // namespace stlab
