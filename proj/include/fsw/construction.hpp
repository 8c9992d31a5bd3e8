#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fsw/adequacy.hpp"
#include "fsw/bset.hpp"
#include "fsw/errors.hpp"
#include "fsw/gf2.hpp"
#include "fsw/ramsey.hpp"
#include "fsw/suitability.hpp"

namespace fsw {

/// The ambient target set of a condition: either an explicit element list
/// or the nonzero span of a family (its FS-set), optionally with an
/// excluded element list. The span form exists because stage-0 targets are
/// far too large to materialize.
struct ambient_set {
  std::optional<bfamily> span_of;
  std::optional<std::vector<bset>> elems;  // sorted unique
  std::vector<bset> excluded;              // sorted unique

  static ambient_set span(bfamily fam) {
    ambient_set a;
    a.span_of = std::move(fam);
    return a;
  }
  static ambient_set explicit_set(std::vector<bset> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    ambient_set a;
    a.elems = std::move(v);
    return a;
  }

  ambient_set minus(std::vector<bset> v) const {
    ambient_set out = *this;
    out.excluded.insert(out.excluded.end(), v.begin(), v.end());
    std::sort(out.excluded.begin(), out.excluded.end());
    out.excluded.erase(std::unique(out.excluded.begin(), out.excluded.end()),
                       out.excluded.end());
    return out;
  }

  bool contains(bset v) const {
    if (std::binary_search(excluded.begin(), excluded.end(), v)) return false;
    if (span_of) {
      if (v.empty()) return false;
      return gf2_solver(*span_of).in_span(v);
    }
    return std::binary_search(elems->begin(), elems->end(), v);
  }

  /// Candidates for witness searches when no pair constrains the pool.
  std::vector<bset> pool() const {
    std::vector<bset> out = span_of ? *span_of : *elems;
    std::erase_if(out, [this](bset v) { return !contains(v); });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ambient_pred pred() const {
    if (span_of) {
      gf2_solver solver(*span_of);
      auto excl = excluded;
      return [solver = std::move(solver), excl = std::move(excl)](bset v) {
        if (v.empty()) return false;
        if (std::binary_search(excl.begin(), excl.end(), v)) return false;
        return solver.in_span(v);
      };
    }
    auto el = *elems;
    auto excl = excluded;
    return [el = std::move(el), excl = std::move(excl)](bset v) {
      if (std::binary_search(excl.begin(), excl.end(), v)) return false;
      return std::binary_search(el.begin(), el.end(), v);
    };
  }

  friend bool operator==(const ambient_set&, const ambient_set&) = default;
};

/// Element of the forcing poset: a finite W inside FS(base_x) whose FS-set
/// stays inside the target and which satisfies suitability clause (ii)
/// relative to base_x.
struct condition {
  bfamily w;
  bfamily base_x;
  ambient_set target;
};

namespace detail {

// clause (ii) of suitability for the given supports; returns the violating
// pair if any
inline std::optional<std::pair<std::size_t, std::size_t>> clause_ii_violation(
    const std::vector<bset>& supp) {
  for (std::size_t j = 0; j < supp.size(); ++j) {
    for (std::size_t k = j; k < supp.size(); ++k) {
      bset inter = supp[j] & supp[k];
      if (inter.empty()) continue;
      bset rest;
      for (std::size_t l = 0; l < supp.size(); ++l)
        if (l != j && l != k) rest = rest | supp[l];
      if ((inter - rest).empty()) return std::make_pair(j, k);
    }
  }
  return std::nullopt;
}

inline void validate_condition(const condition& c, const char* who) {
  auto supp = supports_in(c.base_x, c.w);  // throws when W escapes FS(X)
  if (auto bad = clause_ii_violation(supp))
    throw hypothesis_error(std::string(who) + ": clause (ii) fails at pair (" +
                           std::to_string(bad->first) + "," +
                           std::to_string(bad->second) + ")");
  check_family_cap(c.w);
  std::vector<bset> sums(std::size_t(1) << c.w.size());
  for (std::size_t m = 1; m < sums.size(); ++m) {
    sums[m] = sums[m & (m - 1)] ^ c.w[std::countr_zero(m)];
    if (!c.target.contains(sums[m]))
      throw hypothesis_error(std::string(who) + ": FS(W) leaves the target at " +
                             sums[m].str());
  }
}

}  // namespace detail

/// Reverse inclusion: z extends w.
inline bool poset_leq(const condition& z, const condition& w) {
  if (z.base_x != w.base_x || !(z.target == w.target))
    throw mismatched_ambient_error("conditions live in different posets");
  std::set<bset> zs(z.w.begin(), z.w.end());
  for (bset v : w.w)
    if (!zs.count(v)) return false;
  return true;
}

struct meet_result {
  condition extended;
  adequacy_witness witness;              // a_seq is the appended b-sequence
  std::vector<std::size_t> supply_used;  // indices into the supply argument
};

/// One dense-set extension step: find a fresh adequacy witness in the
/// target, build the auxiliary elements by pigeonhole collisions over the
/// supply, and append the assembled b's to the condition. The output is a
/// strictly stronger condition whose new elements simultaneously witness
/// suitability for base_x and (pairs, m)-adequacy.
inline meet_result dense_meet(const condition& z, const std::vector<xy_pair>& pairs,
                              std::size_t m, const bfamily& supply) {
  if (m == 0) throw std::invalid_argument("dense_meet needs m >= 1");
  detail::validate_condition(z, "dense_meet precondition");
  gf2_solver xsolver(z.base_x);
  if (!xsolver.independent())
    throw hypothesis_error("base_x is linearly dependent");
  auto in_target = z.target.pred();

  bset used;
  for (bset v : z.w) used = used | *xsolver.solve(v);

  // candidate pool for the adequacy witness: target elements with fresh
  // X-support, inside every FS(Y_i)
  std::vector<bset> pool;
  if (pairs.empty()) {
    pool = z.target.pool();
  } else {
    pool = fs_b(pairs[0].y);
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      gf2_solver s(pairs[i].y);
      std::erase_if(pool, [&](bset v) { return !s.in_span(v); });
    }
    std::erase_if(pool, [&](bset v) { return !in_target(v); });
  }
  std::erase_if(pool, [&](bset v) {
    auto s = xsolver.solve(v);
    return !s || s->empty() || !(*s & used).empty();
  });
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  auto found = check_adequate_impl(in_target, pool, pairs, m);
  if (!found.ok)
    throw no_witness_error("target set is not adequate for the request: " +
                           found.reason);
  const std::vector<bset>& a_seq = found.witness.a_seq;

  bset a_supp;
  for (bset a : a_seq) a_supp = a_supp | *xsolver.solve(a);
  std::vector<gf2_solver> ysolvers;
  std::vector<bset> y_supp_a(pairs.size());  // Y_i-support of the whole witness
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    ysolvers.emplace_back(pairs[i].y);
    for (bset a : a_seq) y_supp_a[i] = y_supp_a[i] | *ysolvers[i].solve(a);
  }

  // supply elements usable for collisions: inside span(X) and every span(Y_i)
  struct supply_item {
    std::size_t index;
    bset value;
    bset xsupp;
    std::vector<bset> ysupp;
  };
  std::vector<supply_item> avail;
  for (std::size_t idx = 0; idx < supply.size(); ++idx) {
    bset v = supply[idx];
    auto xs = xsolver.solve(v);
    if (!xs || v.empty()) continue;
    supply_item item{idx, v, *xs, {}};
    bool ok = true;
    for (auto& ys : ysolvers) {
      auto s = ys.solve(v);
      if (!s) {
        ok = false;
        break;
      }
      item.ysupp.push_back(*s);
    }
    if (ok) avail.push_back(std::move(item));
  }

  const std::size_t aux_count = m + m * (m - 1) / 2;
  std::vector<bset> xs;           // the auxiliary elements
  std::vector<bset> fs_ax;        // FS of a_seq followed by xs, grown incrementally
  {
    std::vector<bset> sums(std::size_t(1) << m);
    for (std::size_t mask = 1; mask < sums.size(); ++mask) {
      sums[mask] = sums[mask & (mask - 1)] ^ a_seq[std::countr_zero(mask)];
      fs_ax.push_back(sums[mask]);
    }
  }
  bset x_supp_all;
  std::vector<std::size_t> consumed;

  for (std::size_t k = 0; k < aux_count; ++k) {
    bset forbidden = used | a_supp | x_supp_all;
    std::vector<std::vector<bset>> tags;
    tags.reserve(avail.size());
    for (const auto& item : avail) {
      std::vector<bset> tag;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        tag.push_back(y_supp_a[i] & item.ysupp[i]);
      tag.push_back(forbidden & item.xsupp);
      tags.push_back(std::move(tag));
    }
    auto least = pigeonhole_collision(tags);
    bool placed = false;
    bool first_match_seen = false;
    for (std::size_t j = 1; j < avail.size() && !placed; ++j) {
      for (std::size_t i = 0; i < j && !placed; ++i) {
        if (tags[i] != tags[j]) continue;
        if (!first_match_seen) {
          if (!least || least->first != i || least->second != j)
            throw claim_violated_error(
                "collision scan disagrees with pigeonhole_collision");
          first_match_seen = true;
        }
        bset cand = avail[i].value ^ avail[j].value;
        if (cand.empty()) continue;
        // the collision cancels every tagged overlap
        bset cand_xsupp = avail[i].xsupp ^ avail[j].xsupp;
        if (!(cand_xsupp & forbidden).empty())
          throw claim_violated_error("collision left a dirty X-support");
        bool member_ok = in_target(cand);
        for (std::size_t t = 0; t < fs_ax.size() && member_ok; ++t) {
          bset v = fs_ax[t] ^ cand;
          if (v.empty() || !in_target(v)) member_ok = false;
        }
        if (!member_ok) continue;
        // accept
        const std::size_t base = fs_ax.size();
        for (std::size_t t = 0; t < base; ++t) fs_ax.push_back(fs_ax[t] ^ cand);
        fs_ax.push_back(cand);
        x_supp_all = x_supp_all | cand_xsupp;
        xs.push_back(cand);
        consumed.push_back(avail[i].index);
        consumed.push_back(avail[j].index);
        // larger index first so the erase below stays valid
        avail.erase(avail.begin() + j);
        avail.erase(avail.begin() + i);
        placed = true;
      }
    }
    if (!placed)
      throw supply_exhausted_error(
          "no usable collision pair for auxiliary element " + std::to_string(k) +
          " of " + std::to_string(aux_count) + " (supply left: " +
          std::to_string(avail.size()) + ")");
  }

  // b_j = a_j + x_j + sum of the link elements x_f({j,k}), f colex on pairs
  auto link_index = [m](std::size_t j, std::size_t k) {
    if (j > k) std::swap(j, k);
    return m + k * (k - 1) / 2 + j;
  };
  std::vector<bset> b_seq;
  for (std::size_t j = 0; j < m; ++j) {
    bset b = a_seq[j] ^ xs[j];
    for (std::size_t k = 0; k < m; ++k)
      if (k != j) b = b ^ xs[link_index(j, k)];
    b_seq.push_back(b);
  }

  condition next = z;
  next.w.insert(next.w.end(), b_seq.begin(), b_seq.end());
  detail::validate_condition(next, "dense_meet result");
  // the b's must witness suitability among themselves
  {
    auto supp = detail::supports_in(z.base_x, b_seq);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k)
        if ((supp[j] & supp[k]).empty())
          throw claim_violated_error("b_" + std::to_string(j) + " and b_" +
                                     std::to_string(k) + " have disjoint supports");
  }
  adequacy_witness wit{pairs, m, b_seq, found.witness.per_pair};
  auto check = validate_adequacy_witness(in_target, wit);
  if (!check.ok)
    throw claim_violated_error("assembled b-sequence fails witness validation: " +
                               check.reason);
  return {std::move(next), std::move(wit), std::move(consumed)};
}

// ---------------------------------------------------------------------------
// staged runs

struct stage_plan {
  std::optional<std::size_t> reuse_base_of;  // earlier stage index; fresh basis else
  std::vector<std::size_t> request_ms;
  std::optional<std::vector<bset>> target;
};

struct run_config {
  unsigned universe = 64;
  std::uint64_t seed = 0;
  std::vector<stage_plan> schedule;
  std::size_t crosscheck_zmax = 3;
};

struct meet_record {
  std::vector<std::size_t> pair_stages;
  std::size_t m = 0;
  adequacy_witness witness;
  std::size_t supply_consumed = 0;
};

struct stage_log {
  std::size_t stage = 0;
  bfamily chosen_x;
  bfamily built_y;
  suitability_cert cert;
  std::vector<meet_record> meets;
  std::size_t supply_used = 0;
  std::uint64_t seed = 0;
  int target_side = -1;  // -1 none, 0 inside the target, 1 in the complement
  std::optional<std::vector<bset>> target;
};

/// Base elements one dense_meet call at width m consumes from the previous
/// stage: m witness elements plus two supply elements for each of the
/// m + m(m-1)/2 auxiliaries.
inline std::size_t dense_meet_cost(std::size_t m) { return m * m + 2 * m; }

/// Schedule sized so each stage produces enough elements to feed the next:
/// the last stage runs one request, earlier ones scale up by
/// cost/production with one extra call of slack.
inline run_config default_run_config(std::size_t stages, std::size_t m,
                                     std::uint64_t seed, unsigned universe = 64) {
  if (stages == 0 || m == 0)
    throw std::invalid_argument("need at least one stage and m >= 1");
  std::vector<std::size_t> repeats(stages);
  repeats[stages - 1] = 1;
  for (std::size_t s = stages - 1; s-- > 0;) {
    std::size_t need = repeats[s + 1] * dense_meet_cost(m);
    repeats[s] = (need + m - 1) / m + 1;
  }
  run_config cfg;
  cfg.universe = universe;
  cfg.seed = seed;
  for (std::size_t s = 0; s < stages; ++s) {
    stage_plan plan;
    if (s > 0) plan.reuse_base_of = 0;
    plan.request_ms.assign(repeats[s], m);
    cfg.schedule.push_back(std::move(plan));
  }
  return cfg;
}

/// Documented estimate of the base positions a run consumes; the engine
/// reports SupplyExhausted honestly when the universe turns out too small.
inline std::size_t estimate_base_need(const run_config& cfg, std::size_t m) {
  if (cfg.schedule.empty()) return 0;
  std::size_t need = 0;
  for (std::size_t mm : cfg.schedule.front().request_ms) need += dense_meet_cost(mm);
  (void)m;
  return need;
}

namespace detail {

inline bfamily shuffled(bfamily items, std::uint64_t seed, std::size_t stage) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (stage + 1)));
  std::shuffle(items.begin(), items.end(), rng);
  return items;
}

// subfamilies of Y with pairwise disjoint X-supports must never yield an
// adequate FS-set
inline std::size_t crosscheck_disjoint_blocks(const bfamily& x, const bfamily& y,
                                              std::size_t zmax) {
  auto supp = supports_in(x, y);
  std::size_t checked = 0;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty()) {
      bfamily z;
      for (std::size_t p : pick) z.push_back(y[p]);
      verify_disjoint_not_adequate(x, y, z);
      ++checked;
    }
    if (pick.size() == zmax) return;
    for (std::size_t j = start; j < y.size(); ++j) {
      bool disj = true;
      for (std::size_t p : pick)
        if (!(supp[p] & supp[j]).empty()) {
          disj = false;
          break;
        }
      if (!disj) continue;
      pick.push_back(j);
      self(self, j + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return checked;
}

}  // namespace detail

/// Runs the schedule: each stage picks its base family, iterates dense_meet
/// over the requested widths against all previously built (X, Y) pairs, and
/// certifies the resulting Y. Ambients follow the fixed rule: stage 0
/// targets the nonzero span of its base, stage s > 0 targets FS of the
/// previous stage's Y, intersected with the stage target when one is given.
inline std::vector<stage_log> run_stages(const run_config& cfg) {
  if (cfg.schedule.empty()) return {};
  if (cfg.universe > 64)
    throw std::invalid_argument("universe is capped at 64 indices");
  std::vector<stage_log> logs;
  std::vector<xy_pair> pairs;

  for (std::size_t s = 0; s < cfg.schedule.size(); ++s) {
    const stage_plan& plan = cfg.schedule[s];
    if (plan.request_ms.empty())
      throw std::invalid_argument("stage " + std::to_string(s) + " requests nothing");
    stage_log log;
    log.stage = s;
    log.seed = cfg.seed;

    if (plan.reuse_base_of) {
      if (*plan.reuse_base_of >= s)
        throw std::invalid_argument("stage may only reuse an earlier base");
      log.chosen_x = logs[*plan.reuse_base_of].chosen_x;
      // the schedule claims FS(Y_prev) lies inside FS(X); verify it
      if (s > 0) {
        gf2_solver xs(log.chosen_x);
        for (bset v : logs[s - 1].built_y)
          if (!xs.in_span(v))
            throw hypothesis_error("scheduled base does not span the previous Y");
      }
    } else {
      for (unsigned i = 0; i < cfg.universe; ++i) log.chosen_x.push_back(bset({i}));
    }

    ambient_set base = (s == 0) ? ambient_set::span(log.chosen_x)
                                : ambient_set::span(logs[s - 1].built_y);
    bfamily supply_src = (s == 0) ? log.chosen_x : logs[s - 1].built_y;

    auto attempt = [&](const ambient_set& target_amb) {
      stage_log trial = log;
      bfamily supply = detail::shuffled(supply_src, cfg.seed, s);
      condition cond{{}, trial.chosen_x, target_amb};
      for (std::size_t mm : plan.request_ms) {
        auto res = dense_meet(cond, pairs, mm, supply);
        cond = std::move(res.extended);
        meet_record rec;
        for (std::size_t t = 0; t < s; ++t) rec.pair_stages.push_back(t);
        rec.m = mm;
        rec.witness = std::move(res.witness);
        rec.supply_consumed = res.supply_used.size();
        trial.supply_used += rec.supply_consumed;
        trial.meets.push_back(std::move(rec));
        // drop consumed supply, larger indices first
        std::sort(res.supply_used.rbegin(), res.supply_used.rend());
        for (std::size_t idx : res.supply_used) supply.erase(supply.begin() + idx);
      }
      trial.built_y = cond.w;
      return trial;
    };

    if (plan.target) {
      log.target = plan.target;
      std::vector<bset> inside;
      for (bset v : *plan.target)
        if (base.contains(v)) inside.push_back(v);
      try {
        log = attempt(ambient_set::explicit_set(inside));
        log.target_side = 0;
      } catch (const no_witness_error&) {
        log = attempt(base.minus(*plan.target));
        log.target_side = 1;
      } catch (const supply_exhausted_error&) {
        log = attempt(base.minus(*plan.target));
        log.target_side = 1;
      }
      log.target = plan.target;
    } else {
      std::uint64_t keep_seed = log.seed;
      log = attempt(base);
      log.seed = keep_seed;
    }
    log.stage = s;
    log.seed = cfg.seed;

    std::size_t m_top = *std::max_element(plan.request_ms.begin(), plan.request_ms.end());
    auto cert = check_suitable(log.chosen_x, log.built_y, m_top);
    if (!cert.ok)
      throw claim_violated_error("stage " + std::to_string(s) +
                                 " built an unsuitable Y: " + cert.reason);
    log.cert = std::move(cert.cert);
    pairs.push_back({log.chosen_x, log.built_y});
    logs.push_back(std::move(log));
  }

  for (const auto& log : logs)
    detail::crosscheck_disjoint_blocks(log.chosen_x, log.built_y,
                                       std::min(cfg.crosscheck_zmax,
                                                log.built_y.size()));
  return logs;
}

struct verify_log_result {
  bool ok = true;
  std::vector<std::string> issues;                 // one line per problem
  std::vector<std::pair<std::size_t, bool>> stages;  // per-stage verdicts
};

/// Revalidates a recorded run without re-searching: replays every meet
/// against the reconstructed ambients, checks the condition invariants and
/// the stored certificates, and re-runs the disjoint-support cross-check.
inline verify_log_result verify_stages(const std::vector<stage_log>& logs,
                                       std::size_t crosscheck_zmax = 3) {
  verify_log_result out;
  for (std::size_t s = 0; s < logs.size(); ++s) {
    const stage_log& log = logs[s];
    bool stage_ok = true;
    auto fail = [&](const std::string& why) {
      out.issues.push_back("stage " + std::to_string(s) + ": " + why);
      stage_ok = false;
    };
    try {
      ambient_set base = (s == 0) ? ambient_set::span(log.chosen_x)
                                  : ambient_set::span(logs[s - 1].built_y);
      ambient_set amb = base;
      if (log.target) {
        if (log.target_side == 0) {
          std::vector<bset> inside;
          for (bset v : *log.target)
            if (base.contains(v)) inside.push_back(v);
          amb = ambient_set::explicit_set(inside);
        } else if (log.target_side == 1) {
          amb = base.minus(*log.target);
        } else {
          fail("a target is recorded without a side");
        }
      }
      auto in_amb = amb.pred();

      condition cond{{}, log.chosen_x, amb};
      for (std::size_t mi = 0; mi < log.meets.size(); ++mi) {
        const meet_record& rec = log.meets[mi];
        std::vector<xy_pair> pairs;
        for (std::size_t t : rec.pair_stages) {
          if (t >= s) {
            fail("meet " + std::to_string(mi) + " references a later stage");
            break;
          }
          pairs.push_back({logs[t].chosen_x, logs[t].built_y});
        }
        if (!stage_ok) break;
        if (rec.witness.m != rec.m || rec.witness.a_seq.size() != rec.m) {
          fail("meet " + std::to_string(mi) + " has inconsistent m");
          break;
        }
        if (rec.witness.pairs.size() != pairs.size()) {
          fail("meet " + std::to_string(mi) + " pair family size mismatch");
          break;
        }
        for (std::size_t i = 0; i < pairs.size(); ++i)
          if (rec.witness.pairs[i].x != pairs[i].x ||
              rec.witness.pairs[i].y != pairs[i].y) {
            fail("meet " + std::to_string(mi) + " records unexpected pairs");
            break;
          }
        if (!stage_ok) break;
        auto check = validate_adequacy_witness(in_amb, rec.witness);
        if (!check.ok) {
          fail("meet " + std::to_string(mi) + " witness invalid: " + check.reason);
          break;
        }
        // the new elements must strictly extend the condition and witness
        // suitability among themselves
        auto supp = detail::supports_in(log.chosen_x, rec.witness.a_seq);
        for (std::size_t j = 0; j < rec.m; ++j)
          for (std::size_t k = j + 1; k < rec.m; ++k)
            if ((supp[j] & supp[k]).empty())
              fail("meet " + std::to_string(mi) +
                   " added elements with disjoint supports");
        condition next = cond;
        next.w.insert(next.w.end(), rec.witness.a_seq.begin(),
                      rec.witness.a_seq.end());
        detail::validate_condition(next, "replay");
        if (!poset_leq(next, cond) || next.w.size() <= cond.w.size())
          fail("meet " + std::to_string(mi) + " does not strictly extend");
        cond = std::move(next);
      }
      if (stage_ok && cond.w != log.built_y) fail("built Y differs from the replay");

      if (stage_ok) {
        if (log.cert.base != log.chosen_x || log.cert.suitable != log.built_y)
          fail("certificate families differ from the log");
      }
      if (stage_ok) {
        auto supp = detail::supports_in(log.chosen_x, log.built_y);
        if (auto bad = detail::clause_ii_violation(supp))
          fail("certificate clause (ii) fails");
        for (std::size_t m = 1; m <= log.cert.m_max; ++m) {
          auto it = log.cert.witnesses.find(m);
          if (it == log.cert.witnesses.end()) {
            fail("certificate misses the " + std::to_string(m) + "-witness");
            continue;
          }
          const auto& w = it->second;
          if (w.size() != m) {
            fail("stored " + std::to_string(m) + "-witness has wrong length");
            continue;
          }
          bool in_range = true;
          for (std::size_t pos : w)
            if (pos >= log.built_y.size()) {
              fail("stored witness position out of range");
              in_range = false;
            }
          if (!in_range) continue;
          for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t b = a + 1; b < w.size(); ++b)
              if (w[a] == w[b] || (supp[w[a]] & supp[w[b]]).empty())
                fail("stored " + std::to_string(m) + "-witness is not a witness");
        }
      }
      if (stage_ok)
        detail::crosscheck_disjoint_blocks(
            log.chosen_x, log.built_y,
            std::min(crosscheck_zmax, log.built_y.size()));
    } catch (const error& e) {
      fail(e.what());
    }
    out.stages.emplace_back(s, stage_ok);
    out.ok = out.ok && stage_ok;
  }
  return out;
}

}  // namespace fsw
