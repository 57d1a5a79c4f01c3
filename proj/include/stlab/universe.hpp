#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stlab/bits.hpp"
#include "stlab/core.hpp"

namespace stlab {

/// An indexed, lexicographically sorted family of tuples. Subsets of the
/// family are represented as Bits over the index.
class TupleUniverse {
 public:
  TupleUniverse() = default;
  explicit TupleUniverse(std::vector<Tuple> tuples) : tuples_(std::move(tuples)) {
    std::sort(tuples_.begin(), tuples_.end());
    for (std::size_t i = 0; i < tuples_.size(); ++i) index_.emplace(tuples_[i].mask(), i);
  }

  std::size_t size() const noexcept { return tuples_.size(); }
  const Tuple& operator[](std::size_t i) const noexcept { return tuples_[i]; }
  const std::vector<Tuple>& tuples() const noexcept { return tuples_; }

  std::optional<std::size_t> find(const Tuple& t) const {
    auto it = index_.find(t.mask());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Bits empty_set() const { return Bits(tuples_.size()); }

  Bits full_set() const {
    Bits b(tuples_.size());
    for (std::size_t i = 0; i < tuples_.size(); ++i) b.set(i);
    return b;
  }

  std::vector<Tuple> decode(const Bits& b) const {
    std::vector<Tuple> out;
    b.for_each([&](std::size_t i) { out.push_back(tuples_[i]); });
    return out;
  }

 private:
  std::vector<Tuple> tuples_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

namespace detail {

/// Process-wide cache of immutable per-(m, d) tables.
template <class Space>
std::shared_ptr<const Space> cached_space(int m, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Space>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, d}];
  if (!slot) slot = std::make_shared<const Space>(m, d);
  return slot;
}

}  // namespace detail

}  // namespace stlab
