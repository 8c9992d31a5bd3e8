#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fsw/bset.hpp"
#include "fsw/errors.hpp"
#include "fsw/gf2.hpp"
#include "fsw/suitability.hpp"

namespace fsw {

/// A pair (X, Y) with X independent and Y suitable for X.
struct xy_pair {
  bfamily x;
  bfamily y;
};

/// Witness for (Y-family, m)-adequacy: the sequence a_j plus, for each
/// pair, an m-witness for suitability given as positions into that Y.
struct adequacy_witness {
  std::vector<xy_pair> pairs;
  std::size_t m = 0;
  std::vector<bset> a_seq;
  std::vector<std::vector<std::size_t>> per_pair;
};

struct adequacy_check {
  bool ok = false;
  std::string reason;
};

/// Membership predicate for the ambient set A. check_adequate and friends
/// take an explicit element list; the construction engine supplies spans.
using ambient_pred = std::function<bool(bset)>;

inline ambient_pred ambient_of(const std::vector<bset>& elems) {
  std::set<bset> s(elems.begin(), elems.end());
  return [s = std::move(s)](bset v) { return s.count(v) != 0; };
}

/// Verifies a stored witness without re-searching: clause (i) on the whole
/// FS-set of a_seq, clause (ii) against the recorded suitability witnesses.
inline adequacy_check validate_adequacy_witness(const ambient_pred& in_a,
                                                const adequacy_witness& w) try {
  if (w.a_seq.size() != w.m) return {false, "witness length differs from m"};
  if (w.per_pair.size() != w.pairs.size())
    return {false, "per-pair witness count differs from the pair count"};
  if (w.m == 0) return {false, "m must be positive"};

  // FS(a) inside A and inside every FS(Y_i)
  std::vector<gf2_solver> ysolvers;
  for (const auto& p : w.pairs) ysolvers.emplace_back(p.y);
  for (std::size_t i = 0; i < w.pairs.size(); ++i)
    if (!ysolvers[i].independent())
      return {false, "Y of pair " + std::to_string(i) + " is linearly dependent"};
  const std::size_t total = std::size_t(1) << w.m;
  std::vector<bset> sums(total);
  for (std::size_t mask = 1; mask < total; ++mask) {
    sums[mask] = sums[mask & (mask - 1)] ^ w.a_seq[std::countr_zero(mask)];
    bset v = sums[mask];
    if (!in_a(v)) return {false, "FS(a) leaves A at " + v.str()};
    if (v.empty()) return {false, "FS(a) contains the empty set"};
    for (std::size_t i = 0; i < w.pairs.size(); ++i)
      if (!ysolvers[i].in_span(v))
        return {false, "FS(a) leaves FS(Y_" + std::to_string(i) + ") at " + v.str()};
  }

  for (std::size_t i = 0; i < w.pairs.size(); ++i) {
    const auto& ys = w.per_pair[i];
    if (ys.size() != w.m)
      return {false, "pair " + std::to_string(i) + ": witness length differs from m"};
    for (std::size_t j = 0; j < w.m; ++j)
      if (ys[j] >= w.pairs[i].y.size())
        return {false, "pair " + std::to_string(i) + ": position out of range"};
    for (std::size_t j = 0; j < w.m; ++j)
      for (std::size_t k = j + 1; k < w.m; ++k)
        if (ys[j] == ys[k])
          return {false, "pair " + std::to_string(i) + ": repeated witness position"};
    // the chosen y's must be an m-witness for the suitability of Y_i
    auto ysupp = detail::supports_in(w.pairs[i].x, w.pairs[i].y);
    for (std::size_t j = 0; j < w.m; ++j)
      for (std::size_t k = j + 1; k < w.m; ++k)
        if ((ysupp[ys[j]] & ysupp[ys[k]]).empty())
          return {false, "pair " + std::to_string(i) +
                             ": chosen y's do not pairwise intersect in X-support"};
    // y_j inside the Y-support of a_j and of no other a_k
    for (std::size_t j = 0; j < w.m; ++j) {
      for (std::size_t k = 0; k < w.m; ++k) {
        auto s = ysolvers[i].solve(w.a_seq[k]);
        if (!s) return {false, "a_" + std::to_string(k) + " left span(Y)"};
        bool inside = s->contains(static_cast<unsigned>(ys[j]));
        if (k == j && !inside)
          return {false, "pair " + std::to_string(i) + ": y_" + std::to_string(j) +
                             " is not in the Y-support of a_" + std::to_string(j)};
        if (k != j && inside)
          return {false, "pair " + std::to_string(i) + ": y_" + std::to_string(j) +
                             " appears in the Y-support of a_" + std::to_string(k)};
      }
    }
  }
  return {true, ""};
} catch (const error& e) {
  return {false, e.what()};
}

struct adequacy_result {
  bool ok = false;
  adequacy_witness witness;  // valid when ok
  std::string reason;        // why the search failed otherwise
};

namespace detail {

struct pair_ctx {
  gf2_solver ysolver;
  std::vector<bset> ysupp_in_x;       // X-supports of the Y members
  std::vector<std::uint64_t> meets;   // meets[p]: positions whose support hits p's
};

// assigns one witness position per slot: each from the slot's private part
// of the Y-support, pairwise intersecting in X-support
inline bool assign_pair_witness(const pair_ctx& ctx,
                                const std::vector<std::uint64_t>& priv,
                                std::vector<std::size_t>& out) {
  const std::size_t m = priv.size();
  out.assign(m, 0);
  auto rec = [&](auto&& self, std::size_t j) -> bool {
    if (j == m) return true;
    for (std::uint64_t rest = priv[j]; rest; rest &= rest - 1) {
      auto cand = static_cast<std::size_t>(std::countr_zero(rest));
      bool ok = true;
      for (std::size_t k = 0; k < j && ok; ++k)
        if (!(ctx.meets[out[k]] >> cand & 1)) ok = false;
      if (!ok) continue;
      out[j] = cand;
      if (self(self, j + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace detail

/// Backtracking search for a (Y-family, m)-witness inside the candidate
/// pool, deterministic ascending order, first witness returned. The pool is
/// A itself when no pairs are given, otherwise A intersected with every
/// FS(Y_i). Partial tuples are pruned by FS-membership and by pairwise
/// witness feasibility.
inline adequacy_result check_adequate_impl(const ambient_pred& in_a,
                                           const std::vector<bset>& pool_sorted,
                                           const std::vector<xy_pair>& pairs,
                                           std::size_t m) {
  if (m == 0) return {false, {}, "m must be positive"};
  std::vector<detail::pair_ctx> ctxs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto check = check_suitable(pairs[i].x, pairs[i].y, m);
    if (!check.ok)
      return {false, {}, "pair " + std::to_string(i) +
                             ": Y is not suitable for X up to m: " + check.reason};
    detail::pair_ctx ctx{gf2_solver(pairs[i].y),
                         detail::supports_in(pairs[i].x, pairs[i].y),
                         {}};
    ctx.meets.resize(pairs[i].y.size());
    for (std::size_t p = 0; p < pairs[i].y.size(); ++p)
      for (std::size_t q = 0; q < pairs[i].y.size(); ++q)
        if (!(ctx.ysupp_in_x[p] & ctx.ysupp_in_x[q]).empty())
          ctx.meets[p] |= std::uint64_t(1) << q;
    ctxs.push_back(std::move(ctx));
  }

  // admissible pool entries with their Y-supports solved once
  struct entry {
    bset value;
    std::vector<std::uint64_t> ysupp;
  };
  std::vector<entry> pool;
  pool.reserve(pool_sorted.size());
  for (bset v : pool_sorted) {
    if (v.empty() || !in_a(v)) continue;
    entry e{v, {}};
    bool ok = true;
    for (const auto& ctx : ctxs) {
      auto s = ctx.ysolver.solve(v);
      if (!s) {
        ok = false;
        break;
      }
      e.ysupp.push_back(s->mask());
    }
    if (ok) pool.push_back(std::move(e));
  }

  // a pair of tuple members is workable only if each owns a private
  // Y-element meeting one of the other's in X-support
  auto pair_feasible = [&](const entry& a, const entry& b) {
    for (std::size_t i = 0; i < ctxs.size(); ++i) {
      std::uint64_t priv_a = a.ysupp[i] & ~b.ysupp[i];
      std::uint64_t priv_b = b.ysupp[i] & ~a.ysupp[i];
      bool found = false;
      for (std::uint64_t rest = priv_a; rest && !found; rest &= rest - 1)
        if (ctxs[i].meets[std::countr_zero(rest)] & priv_b) found = true;
      if (!found) return false;
    }
    return true;
  };

  std::vector<std::size_t> chosen;
  std::vector<bset> fs_chosen;  // running FS of the chosen prefix
  adequacy_witness wit{pairs, m, {}, {}};
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (chosen.size() == m) {
      wit.a_seq.clear();
      for (std::size_t idx : chosen) wit.a_seq.push_back(pool[idx].value);
      wit.per_pair.clear();
      for (std::size_t i = 0; i < ctxs.size(); ++i) {
        std::vector<std::uint64_t> priv(m);
        for (std::size_t j = 0; j < m; ++j) {
          priv[j] = pool[chosen[j]].ysupp[i];
          for (std::size_t k = 0; k < m; ++k)
            if (k != j) priv[j] &= ~pool[chosen[k]].ysupp[i];
        }
        std::vector<std::size_t> ys;
        if (!detail::assign_pair_witness(ctxs[i], priv, ys)) return false;
        wit.per_pair.push_back(std::move(ys));
      }
      return true;
    }
    for (std::size_t idx = start; idx < pool.size(); ++idx) {
      const entry& cand = pool[idx];
      bool fits = true;
      for (std::size_t j : chosen)
        if (!pair_feasible(pool[j], cand)) {
          fits = false;
          break;
        }
      // every new sum must stay inside A (span membership is automatic)
      std::size_t added = 0;
      if (fits) {
        const std::size_t base = fs_chosen.size();
        for (std::size_t si = 0; si < base; ++si) {
          bset v = fs_chosen[si] ^ cand.value;
          if (v.empty() || !in_a(v)) {
            fits = false;
            break;
          }
          fs_chosen.push_back(v);
          ++added;
        }
        if (fits) {
          fs_chosen.push_back(cand.value);
          ++added;
        }
      }
      if (fits) {
        chosen.push_back(idx);
        if (self(self, idx + 1)) return true;
        chosen.pop_back();
      }
      fs_chosen.resize(fs_chosen.size() - added);
    }
    return false;
  };
  if (!rec(rec, 0)) return {false, {}, "no witness found"};
  return {true, std::move(wit), ""};
}

/// Public entry: A given as an explicit element list.
inline adequacy_result check_adequate(const std::vector<bset>& a,
                                      const std::vector<xy_pair>& pairs,
                                      std::size_t m) {
  std::vector<bset> pool;
  if (pairs.empty()) {
    pool = a;
  } else {
    pool = fs_b(pairs[0].y);
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      gf2_solver s(pairs[i].y);
      std::erase_if(pool, [&](bset v) { return !s.in_span(v); });
    }
    auto in = ambient_of(a);
    std::erase_if(pool, [&](bset v) { return !in(v); });
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return check_adequate_impl(ambient_of(a), pool, pairs, m);
}

/// Sums the witness over disjoint index parts: a (Y-family, M)-witness
/// condenses to a (Y-family, |parts|)-witness. The output is revalidated,
/// never trusted.
inline adequacy_witness condense_witness(const ambient_pred& in_a,
                                         const adequacy_witness& big,
                                         const std::vector<std::vector<std::size_t>>& parts) {
  auto base = validate_adequacy_witness(in_a, big);
  if (!base.ok) throw hypothesis_error("input witness invalid: " + base.reason);
  bset seen;
  for (const auto& part : parts) {
    if (part.empty()) throw bad_partition_error("empty part");
    for (std::size_t k : part) {
      if (k >= big.m) throw bad_partition_error("part index out of range");
      if (seen.contains(static_cast<unsigned>(k)))
        throw bad_partition_error("parts overlap at index " + std::to_string(k));
      seen = seen | bset({static_cast<unsigned>(k)});
    }
  }
  adequacy_witness out{big.pairs, parts.size(), {}, {}};
  for (const auto& part : parts) {
    bset c;
    for (std::size_t k : part) c = c ^ big.a_seq[k];
    out.a_seq.push_back(c);
  }
  for (std::size_t i = 0; i < big.pairs.size(); ++i) {
    std::vector<std::size_t> ys;
    for (const auto& part : parts) {
      std::size_t k = *std::min_element(part.begin(), part.end());
      ys.push_back(big.per_pair[i][k]);
    }
    out.per_pair.push_back(std::move(ys));
  }
  auto check = validate_adequacy_witness(in_a, out);
  if (!check.ok)
    throw claim_violated_error("condensed witness fails revalidation: " + check.reason);
  return out;
}

/// The disjoint-support obstruction: when the elements of Z (inside FS(Y),
/// Y suitable for X) have pairwise disjoint X-supports, FS(Z) admits no
/// ((X,Y),2)-witness. Throws when the conclusion fails, which would be an
/// implementation bug.
inline void verify_disjoint_not_adequate(const bfamily& x, const bfamily& y,
                                         const bfamily& z) {
  if (!is_independent(x)) throw hypothesis_error("X is linearly dependent");
  if (!is_independent(z)) throw hypothesis_error("Z is linearly dependent");
  auto suit = check_suitable(x, y, std::min<std::size_t>(2, y.size()));
  if (!suit.ok) throw hypothesis_error("Y is not suitable for X: " + suit.reason);
  gf2_solver ysolver(y);
  for (std::size_t i = 0; i < z.size(); ++i)
    if (z[i].empty() || !ysolver.in_span(z[i]))
      throw hypothesis_error("Z[" + std::to_string(i) + "] is not in FS(Y)");
  if (!is_pairwise_disjoint_supports(x, z))
    throw hypothesis_error("Z does not have pairwise disjoint X-supports");
  auto fsz = fs_b(z);
  auto res = check_adequate(fsz, {{x, y}}, 2);
  if (res.ok)
    throw claim_violated_error(
        "FS(Z) admitted an ((X,Y),2)-witness despite disjoint supports");
}

}  // namespace fsw
