#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "fsw/config.hpp"
#include "fsw/errors.hpp"
#include "fsw/torus.hpp"

namespace fsw {

/// Element of the direct sum of countably many circle groups: a finite map
/// from coordinate index to a nonzero torus element, kept sorted by index.
class group_elem {
 public:
  using coord = std::pair<std::uint32_t, torus_elem>;

  group_elem() = default;

  /// Builds from arbitrary (index, value) pairs: sorts, sums duplicates,
  /// drops zero coordinates.
  explicit group_elem(std::vector<coord> coords) {
    std::stable_sort(coords.begin(), coords.end(),
                     [](const coord& a, const coord& b) { return a.first < b.first; });
    for (auto& [idx, val] : coords) {
      if (idx >= config::index_cap)
        throw cap_exceeded_error("coordinate index " + std::to_string(idx) +
                                 " exceeds the index cap " +
                                 std::to_string(config::index_cap));
      if (!coords_.empty() && coords_.back().first == idx)
        coords_.back().second = coords_.back().second + val;
      else
        coords_.emplace_back(idx, std::move(val));
      if (!coords_.empty() && coords_.back().second.is_zero()) coords_.pop_back();
    }
  }

  static group_elem single(std::uint32_t idx, torus_elem t) {
    return group_elem({{idx, std::move(t)}});
  }

  const std::vector<coord>& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }

  friend group_elem operator+(const group_elem& a, const group_elem& b) {
    group_elem out;
    auto ia = a.coords_.begin(), ib = b.coords_.begin();
    while (ia != a.coords_.end() || ib != b.coords_.end()) {
      if (ib == b.coords_.end() || (ia != a.coords_.end() && ia->first < ib->first)) {
        out.coords_.push_back(*ia++);
      } else if (ia == a.coords_.end() || ib->first < ia->first) {
        out.coords_.push_back(*ib++);
      } else {
        torus_elem s = ia->second + ib->second;
        if (!s.is_zero()) out.coords_.emplace_back(ia->first, std::move(s));
        ++ia;
        ++ib;
      }
    }
    return out;
  }

  group_elem operator-() const {
    group_elem out = *this;
    for (auto& [idx, val] : out.coords_) val = -val;
    return out;
  }

  friend group_elem operator-(const group_elem& a, const group_elem& b) {
    return a + (-b);
  }

  /// k-fold sum; k may be zero or negative.
  group_elem scaled(const bigint& k) const {
    group_elem out;
    for (const auto& [idx, val] : coords_) {
      torus_elem s = val.scaled(k);
      if (!s.is_zero()) out.coords_.emplace_back(idx, std::move(s));
    }
    return out;
  }

  /// Least n >= 1 with nx = 0: the lcm of the coordinate orders. order(0) = 1.
  bigint order() const {
    bigint n = 1;
    for (const auto& [idx, val] : coords_) n = boost::multiprecision::lcm(n, val.order());
    return n;
  }

  /// Coordinate n, zero when absent.
  torus_elem proj(std::uint32_t n) const {
    auto it = std::lower_bound(
        coords_.begin(), coords_.end(), n,
        [](const coord& c, std::uint32_t v) { return c.first < v; });
    if (it != coords_.end() && it->first == n) return it->second;
    return torus_elem();
  }

  /// Least index with a nonzero coordinate.
  std::uint32_t min_index() const {
    if (coords_.empty()) throw zero_element_error("min_index of the zero element");
    return coords_.front().first;
  }

  /// Least n whose coordinate lies outside {0, 1/4, -1/4, 1/2}. Defined
  /// exactly on elements of order > 4: if every coordinate were 4-torsion
  /// the whole element would be.
  std::uint32_t rho() const {
    if (order() <= 4)
      throw not_in_q_error("rho requires order > 4, got order " + order().str());
    for (const auto& [idx, val] : coords_)
      if (!val.four_torsion()) return idx;
    throw claim_violated_error("order > 4 but every coordinate is 4-torsion");
  }

  friend bool operator==(const group_elem& a, const group_elem& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const group_elem& a, const group_elem& b) {
    return !(a == b);
  }
  friend bool operator<(const group_elem& a, const group_elem& b) {
    return std::lexicographical_compare(
        a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end(),
        [](const coord& x, const coord& y) {
          if (x.first != y.first) return x.first < y.first;
          if (x.second == y.second) return false;
          return x.second < y.second;
        });
  }

  friend std::size_t hash_value(const group_elem& g) {
    std::size_t seed = 0x9e3779b97f4a7c15ull;
    for (const auto& [idx, val] : g.coords_) {
      boost::hash_combine(seed, idx);
      boost::hash_combine(seed, hash_value(val));
    }
    return seed;
  }

  std::string str() const {
    if (coords_.empty()) return "0";
    std::string s;
    for (const auto& [idx, val] : coords_) {
      if (!s.empty()) s += " + ";
      s += "<" + val.str() + ">_" + std::to_string(idx);
    }
    return s;
  }

 private:
  std::vector<coord> coords_;
};

struct group_elem_hash {
  std::size_t operator()(const group_elem& g) const { return hash_value(g); }
};

inline group_elem g_add(const group_elem& a, const group_elem& b) { return a + b; }
inline group_elem g_scalar(const bigint& k, const group_elem& x) { return x.scaled(k); }
inline bigint order(const group_elem& x) { return x.order(); }
inline torus_elem proj(const group_elem& x, std::uint32_t n) { return x.proj(n); }
inline std::uint32_t min_index(const group_elem& x) { return x.min_index(); }
inline std::uint32_t rho(const group_elem& x) { return x.rho(); }

}  // namespace fsw
