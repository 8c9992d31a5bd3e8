#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fsw/config.hpp"
#include "fsw/errors.hpp"
#include "fsw/group_elem.hpp"

namespace fsw {

/// Finite sequence of group elements. Repeats are allowed; the uniqueness
/// checks simply fail on them.
using fin_seq = std::vector<group_elem>;

/// A choice of support positions with coefficients in {1, 2}, kept sorted
/// by position. The empty assignment denotes the empty sum.
struct coef_assign {
  std::vector<std::pair<std::size_t, int>> entries;

  friend bool operator==(const coef_assign&, const coef_assign&) = default;
};

namespace detail {

inline std::vector<std::size_t> mask_positions(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; mask; ++p, mask >>= 1)
    if (mask & 1) out.push_back(p);
  return out;
}

// Order on subsets written as sorted position lists, e.g.
// {} < {0} < {0,1} < {0,2} < {1}. Counterexamples are least in this order.
inline bool subset_list_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    int pa = std::countr_zero(a), pb = std::countr_zero(b);
    if (pa != pb) return pa < pb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// Assignments ordered by support (subset list order), then by coefficient
// vector over ascending positions with 1 < 2.
inline bool assign_less(std::pair<std::uint64_t, std::uint64_t> x,
                        std::pair<std::uint64_t, std::uint64_t> y) {
  if (x.first != y.first) return subset_list_less(x.first, y.first);
  std::uint64_t s = x.first;
  while (s) {
    std::uint64_t bit = s & -s;
    bool bx = x.second & bit, by = y.second & bit;
    if (bx != by) return !bx;
    s &= s - 1;
  }
  return false;
}

// sums over every subset of the sequence, indexed by bitmask
inline std::vector<group_elem> subset_sums(const fin_seq& seq) {
  std::vector<group_elem> sums(std::size_t(1) << seq.size());
  for (std::size_t m = 1; m < sums.size(); ++m) {
    std::size_t low = std::countr_zero(m);
    sums[m] = sums[m & (m - 1)] + seq[low];
  }
  return sums;
}

inline void check_fs_cap(const fin_seq& seq) {
  if (seq.size() > config::fs_cap)
    throw cap_exceeded_error("sequence length " + std::to_string(seq.size()) +
                             " exceeds the subset enumeration cap " +
                             std::to_string(config::fs_cap));
}

inline void check_two_uniq_cap(const fin_seq& seq) {
  if (seq.size() > config::two_uniq_cap)
    throw cap_exceeded_error("sequence length " + std::to_string(seq.size()) +
                             " exceeds the weighted-sum enumeration cap " +
                             std::to_string(config::two_uniq_cap));
}

inline coef_assign make_assign(std::uint64_t support, std::uint64_t twos) {
  coef_assign out;
  for (std::uint64_t s = support; s; s &= s - 1) {
    std::size_t p = std::countr_zero(s);
    out.entries.emplace_back(p, (twos >> p) & 1 ? 2 : 1);
  }
  return out;
}

}  // namespace detail

/// All sums over nonempty subsets of positions, duplicates collapsed.
/// Returned sorted for determinism.
inline std::vector<group_elem> fs_set(const fin_seq& seq) {
  detail::check_fs_cap(seq);
  auto sums = detail::subset_sums(seq);
  std::vector<group_elem> out(sums.begin() + 1, sums.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The weighted sum with coefficients from `c`; the empty assignment gives 0.
inline group_elem weighted_sum(const fin_seq& seq, const coef_assign& c) {
  group_elem out;
  std::size_t prev_plus_1 = 0;
  for (const auto& [pos, coef] : c.entries) {
    if (pos >= seq.size())
      throw bad_support_error("assignment position " + std::to_string(pos) +
                              " outside the sequence");
    if (pos + 1 <= prev_plus_1)
      throw bad_support_error("assignment positions not strictly increasing");
    if (coef != 1 && coef != 2)
      throw bad_support_error("coefficient must be 1 or 2");
    prev_plus_1 = pos + 1;
    out = out + (coef == 2 ? seq[pos].scaled(2) : seq[pos]);
  }
  return out;
}

struct uniq_result {
  bool ok = true;
  // least colliding pair, as sorted position lists, when !ok
  std::vector<std::size_t> a, b;
};

/// Uniqueness of finite sums: all 2^n subset sums, the empty one included,
/// are pairwise distinct.
inline uniq_result check_uniqueness(const fin_seq& seq) {
  detail::check_fs_cap(seq);
  auto sums = detail::subset_sums(seq);
  std::unordered_map<std::size_t, std::vector<std::uint64_t>> buckets;
  buckets.reserve(sums.size() * 2);
  for (std::uint64_t m = 0; m < sums.size(); ++m)
    buckets[hash_value(sums[m])].push_back(m);

  bool found = false;
  std::pair<std::uint64_t, std::uint64_t> best;
  auto consider = [&](std::uint64_t x, std::uint64_t y) {
    if (detail::subset_list_less(y, x)) std::swap(x, y);
    std::pair<std::uint64_t, std::uint64_t> cand{x, y};
    if (!found || detail::subset_list_less(cand.first, best.first) ||
        (cand.first == best.first && detail::subset_list_less(cand.second, best.second))) {
      best = cand;
      found = true;
    }
  };
  for (const auto& [h, masks] : buckets) {
    if (masks.size() < 2) continue;
    // split the bucket into true equal-sum groups and take the two least
    // members of each
    std::vector<std::pair<std::uint64_t, std::uint64_t>> groups;  // (least, second least)
    std::vector<std::uint64_t> heads;
    for (std::uint64_t m : masks) {
      bool placed = false;
      for (std::size_t g = 0; g < heads.size(); ++g) {
        if (sums[heads[g]] == sums[m]) {
          auto& [lo, hi] = groups[g];
          if (detail::subset_list_less(m, lo)) {
            hi = lo;
            lo = m;
          } else if (hi == lo || detail::subset_list_less(m, hi)) {
            hi = m;
          }
          placed = true;
          break;
        }
      }
      if (!placed) {
        heads.push_back(m);
        groups.emplace_back(m, m);
      }
    }
    for (auto& [lo, hi] : groups)
      if (lo != hi) consider(lo, hi);
  }
  if (!found) return {};
  return {false, detail::mask_positions(best.first), detail::mask_positions(best.second)};
}

struct two_uniq_result {
  bool ok = true;
  coef_assign c, c_prime;  // least colliding pair of assignments when !ok
};

/// 2-uniqueness of finite sums: all weighted sums with coefficients in
/// {1, 2} (over every support, the empty one included) are pairwise
/// distinct.
inline two_uniq_result check_2uniqueness(const fin_seq& seq) {
  detail::check_two_uniq_cap(seq);
  auto sums = detail::subset_sums(seq);
  // an assignment is (support s, positions t <= s carrying coefficient 2);
  // its value is sums[s] + sums[t]
  auto value = [&](std::pair<std::uint64_t, std::uint64_t> a) {
    return sums[a.first] + sums[a.second];
  };
  std::unordered_map<std::size_t, std::vector<std::pair<std::uint64_t, std::uint64_t>>>
      buckets;
  const std::uint64_t total = std::uint64_t(1) << seq.size();
  for (std::uint64_t s = 0; s < total; ++s) {
    for (std::uint64_t t = s;; t = (t - 1) & s) {
      buckets[hash_value(sums[s] + sums[t])].emplace_back(s, t);
      if (t == 0) break;
    }
  }
  bool found = false;
  std::pair<std::uint64_t, std::uint64_t> bc, bc2;
  auto consider = [&](std::pair<std::uint64_t, std::uint64_t> x,
                      std::pair<std::uint64_t, std::uint64_t> y) {
    if (detail::assign_less(y, x)) std::swap(x, y);
    if (!found || detail::assign_less(x, bc) ||
        (x == bc && detail::assign_less(y, bc2))) {
      bc = x;
      bc2 = y;
      found = true;
    }
  };
  for (const auto& [h, entries] : buckets) {
    if (entries.size() < 2) continue;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> heads, lo, hi;
    for (const auto& e : entries) {
      bool placed = false;
      for (std::size_t g = 0; g < heads.size(); ++g) {
        if (value(heads[g]) == value(e)) {
          if (detail::assign_less(e, lo[g])) {
            hi[g] = lo[g];
            lo[g] = e;
          } else if (hi[g] == lo[g] || detail::assign_less(e, hi[g])) {
            hi[g] = e;
          }
          placed = true;
          break;
        }
      }
      if (!placed) {
        heads.push_back(e);
        lo.push_back(e);
        hi.push_back(e);
      }
    }
    for (std::size_t g = 0; g < heads.size(); ++g)
      if (lo[g] != hi[g]) consider(lo[g], hi[g]);
  }
  if (!found) return {};
  return {false, detail::make_assign(bc.first, bc.second),
          detail::make_assign(bc2.first, bc2.second)};
}

struct carac_report {
  bool cond_i = true;
  bool cond_ii = true;
  bool cond_iii = true;
};

/// Evaluates the three equivalent characterizations of 2-uniqueness
/// independently by brute force. They must always agree; the report is the
/// cross-check.
inline carac_report check_carac_equivalence(const fin_seq& seq) {
  detail::check_two_uniq_cap(seq);
  auto sums = detail::subset_sums(seq);
  const std::uint64_t total = std::uint64_t(1) << seq.size();
  carac_report rep;

  // (i) weighted sums with coefficients in {1,2} are injective in the
  // assignment
  {
    std::unordered_map<std::size_t, std::vector<group_elem>> seen;
    for (std::uint64_t s = 0; s < total && rep.cond_i; ++s) {
      for (std::uint64_t t = s;; t = (t - 1) & s) {
        group_elem v = sums[s] + sums[t];
        auto& bucket = seen[hash_value(v)];
        for (const auto& w : bucket)
          if (w == v) {
            rep.cond_i = false;
            break;
          }
        if (!rep.cond_i) break;
        bucket.push_back(std::move(v));
        if (t == 0) break;
      }
    }
  }

  // (ii) 2*sum(a) + sum(b) over disjoint (a, b) is injective in (a, b)
  {
    std::vector<group_elem> twice(total);
    for (std::uint64_t a = 0; a < total; ++a) twice[a] = sums[a].scaled(2);
    std::unordered_map<std::size_t, std::vector<group_elem>> seen;
    for (std::uint64_t a = 0; a < total && rep.cond_ii; ++a) {
      std::uint64_t comp = (total - 1) & ~a;
      for (std::uint64_t b = comp;; b = (b - 1) & comp) {
        group_elem v = twice[a] + sums[b];
        auto& bucket = seen[hash_value(v)];
        for (const auto& w : bucket)
          if (w == v) {
            rep.cond_ii = false;
            break;
          }
        if (!rep.cond_ii) break;
        bucket.push_back(std::move(v));
        if (b == 0) break;
      }
    }
  }

  // (iii) sum(a) + sum(b) determines both the symmetric difference and the
  // intersection of (a, b)
  {
    struct entry {
      group_elem v;
      std::uint64_t sym, inter;
    };
    std::unordered_map<std::size_t, std::vector<entry>> seen;
    for (std::uint64_t a = 0; a < total && rep.cond_iii; ++a) {
      for (std::uint64_t b = 0; b < total; ++b) {
        group_elem v = sums[a] + sums[b];
        auto& bucket = seen[hash_value(v)];
        bool stop = false;
        for (const auto& e : bucket)
          if (e.v == v && (e.sym != (a ^ b) || e.inter != (a & b))) {
            rep.cond_iii = false;
            stop = true;
            break;
          }
        if (stop) break;
        bucket.push_back({std::move(v), a ^ b, a & b});
      }
    }
  }
  return rep;
}

/// The order-4 case: a sequence whose whole FS-set has order exactly 4 must
/// satisfy 2-uniqueness. The violation branch exists to falsify the
/// implementation, never the mathematics.
inline two_uniq_result verify_order4(const fin_seq& seq) {
  detail::check_two_uniq_cap(seq);
  for (const auto& w : fs_set(seq))
    if (w.order() != 4)
      throw hypothesis_error("FS element " + w.str() + " has order " +
                             w.order().str() + ", expected 4");
  return check_2uniqueness(seq);
}

/// Recovers the index family C with y_n = sum over c_n of the x's, checking
/// that it is pairwise disjoint and that sums map to unions across the
/// whole FS-set of yseq.
inline std::vector<std::vector<std::size_t>> fu_image(const fin_seq& xseq,
                                                      const fin_seq& yseq) {
  detail::check_fs_cap(xseq);
  detail::check_fs_cap(yseq);
  if (!check_2uniqueness(xseq).ok)
    throw hypothesis_error("xseq does not satisfy 2-uniqueness of finite sums");
  auto xsums = detail::subset_sums(xseq);
  std::unordered_map<group_elem, std::uint64_t, group_elem_hash> rep;
  rep.reserve(xsums.size() * 2);
  for (std::uint64_t m = 0; m < xsums.size(); ++m) rep.emplace(xsums[m], m);

  std::vector<std::uint64_t> c(yseq.size());
  for (std::size_t n = 0; n < yseq.size(); ++n) {
    auto it = rep.find(yseq[n]);
    if (it == rep.end() || it->second == 0)
      throw not_in_span_error("y_" + std::to_string(n) +
                              " is not a finite sum of the x sequence");
    c[n] = it->second;
  }
  auto ysums = detail::subset_sums(yseq);
  for (std::uint64_t a = 1; a < ysums.size(); ++a) {
    auto it = rep.find(ysums[a]);
    if (it == rep.end())
      throw hypothesis_error(
          "FS(yseq) is not contained in FS(xseq): the sum over positions " +
          [&] {
            std::string s;
            for (auto p : detail::mask_positions(a)) s += std::to_string(p) + " ";
            return s;
          }() +
          "has no representation");
    std::uint64_t expect = 0;
    for (auto p : detail::mask_positions(a)) expect |= c[p];
    if (it->second != expect)
      throw claim_violated_error("sum over a subfamily is not the union of its parts");
  }
  for (std::size_t n = 0; n < yseq.size(); ++n)
    for (std::size_t m = n + 1; m < yseq.size(); ++m)
      if (c[n] & c[m])
        throw claim_violated_error(
            "representations of y_" + std::to_string(n) + " and y_" +
            std::to_string(m) + " intersect despite 2-uniqueness");

  std::vector<std::vector<std::size_t>> out;
  out.reserve(c.size());
  for (auto m : c) out.push_back(detail::mask_positions(m));
  return out;
}

}  // namespace fsw
