#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "fsw/config.hpp"
#include "fsw/errors.hpp"

namespace fsw {

/// Finite subset of {0..63}, packed into one word. Symmetric difference is
/// the group operation of the Boolean group.
class bset {
 public:
  constexpr bset() = default;
  constexpr explicit bset(std::uint64_t mask) : bits_(mask) {}
  bset(std::initializer_list<unsigned> members) {
    for (unsigned e : members) bits_ |= bit(e);
  }

  static constexpr std::uint64_t bit(unsigned e) { return std::uint64_t(1) << e; }

  /// Builds from member indices, enforcing the configured universe bound.
  static bset checked(const std::vector<unsigned>& members) {
    bset out;
    for (unsigned e : members) {
      if (e >= config::universe_bound)
        throw cap_exceeded_error("set member " + std::to_string(e) +
                                 " exceeds the universe bound " +
                                 std::to_string(config::universe_bound));
      out.bits_ |= bit(e);
    }
    return out;
  }

  std::uint64_t mask() const noexcept { return bits_; }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t size() const noexcept { return std::popcount(bits_); }
  bool contains(unsigned e) const noexcept { return bits_ & bit(e); }

  std::vector<unsigned> members() const {
    std::vector<unsigned> out;
    for (std::uint64_t m = bits_; m; m &= m - 1)
      out.push_back(static_cast<unsigned>(std::countr_zero(m)));
    return out;
  }

  friend bset operator^(bset a, bset b) { return bset(a.bits_ ^ b.bits_); }
  friend bset operator&(bset a, bset b) { return bset(a.bits_ & b.bits_); }
  friend bset operator|(bset a, bset b) { return bset(a.bits_ | b.bits_); }
  friend bset operator-(bset a, bset b) { return bset(a.bits_ & ~b.bits_); }
  bset& operator^=(bset o) {
    bits_ ^= o.bits_;
    return *this;
  }

  friend bool operator==(bset a, bset b) { return a.bits_ == b.bits_; }
  friend bool operator!=(bset a, bset b) { return a.bits_ != b.bits_; }
  friend bool operator<(bset a, bset b) { return a.bits_ < b.bits_; }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (unsigned e : members()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint64_t bits_ = 0;
};

inline bset sym_diff(bset a, bset b) { return a ^ b; }

/// Ordered finite list of bsets. Independence and disjointness are checked
/// properties, not invariants.
using bfamily = std::vector<bset>;

namespace detail {

inline void check_family_cap(const bfamily& x) {
  if (x.size() > config::fs_cap)
    throw cap_exceeded_error("family size " + std::to_string(x.size()) +
                             " exceeds the subset enumeration cap " +
                             std::to_string(config::fs_cap));
}

}  // namespace detail

/// All sums (symmetric differences) over nonempty subfamilies, duplicates
/// collapsed; sorted.
inline std::vector<bset> fs_b(const bfamily& x) {
  detail::check_family_cap(x);
  std::vector<bset> sums(std::size_t(1) << x.size());
  for (std::size_t m = 1; m < sums.size(); ++m)
    sums[m] = sums[m & (m - 1)] ^ x[std::countr_zero(m)];
  std::vector<bset> out(sums.begin() + 1, sums.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// All unions over nonempty subfamilies of a pairwise disjoint family.
/// Coincides with fs_b on such families.
inline std::vector<bset> fu_b(const bfamily& x) {
  detail::check_family_cap(x);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (!(x[i] & x[j]).empty())
        throw not_disjoint_error("family members " + std::to_string(i) + " and " +
                                 std::to_string(j) + " intersect");
  std::vector<bset> uns(std::size_t(1) << x.size());
  for (std::size_t m = 1; m < uns.size(); ++m)
    uns[m] = uns[m & (m - 1)] | x[std::countr_zero(m)];
  std::vector<bset> out(uns.begin() + 1, uns.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fsw
