#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsw/bset.hpp"
#include "fsw/errors.hpp"
#include "fsw/gf2.hpp"

namespace fsw {

/// Certificate that `suitable` is suitable for `base` up to witnesses of
/// length m_max: clause (i) witnesses are recorded per m, clause (ii) was
/// verified over every pair. Serialized certificates carry enough to
/// re-verify without searching.
struct suitability_cert {
  bfamily base;
  bfamily suitable;
  std::size_t m_max = 0;
  std::map<std::size_t, std::vector<std::size_t>> witnesses;  // m -> positions
};

struct suitability_check {
  bool ok = false;
  suitability_cert cert;  // meaningful when ok
  std::string reason;     // names the violated clause when !ok
};

namespace detail {

// X-supports of the family members; throws when X is dependent or some
// member escapes the span (the empty set always does, not being a finite
// sum).
inline std::vector<bset> supports_in(const bfamily& x, const bfamily& y) {
  gf2_solver solver(x);
  if (!solver.independent()) throw not_independent_error("X is linearly dependent");
  std::vector<bset> supp;
  supp.reserve(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) {
    auto s = solver.solve(y[j]);
    if (!s || s->empty())
      throw not_in_span_error("Y[" + std::to_string(j) + "] = " + y[j].str() +
                              " is not in FS(X)");
    supp.push_back(*s);
  }
  return supp;
}

// DFS for m pairwise-intersecting supports, positions ascending, first
// witness wins.
inline bool find_clique(const std::vector<bset>& supp, std::size_t m,
                        std::vector<std::size_t>& out) {
  out.clear();
  std::vector<std::size_t> stack;
  auto rec = [&](auto&& self, std::size_t start) -> bool {
    if (stack.size() == m) {
      out = stack;
      return true;
    }
    for (std::size_t j = start; j < supp.size(); ++j) {
      bool fits = true;
      for (std::size_t k : stack)
        if ((supp[k] & supp[j]).empty()) {
          fits = false;
          break;
        }
      if (!fits) continue;
      stack.push_back(j);
      if (self(self, j + 1)) return true;
      stack.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace detail

/// Checks both suitability clauses for Y against the independent X and, on
/// success, returns a certificate with an m-witness for every
/// m <= min(m_max, |Y|).
inline suitability_check check_suitable(const bfamily& x, const bfamily& y,
                                        std::size_t m_max) {
  auto supp = detail::supports_in(x, y);
  for (std::size_t j = 0; j < y.size(); ++j)
    for (std::size_t k = j + 1; k < y.size(); ++k)
      if (y[j] == y[k])
        return {false, {}, "Y holds the same element at positions " +
                               std::to_string(j) + " and " + std::to_string(k) +
                               " and cannot be suitable"};

  // clause (ii), over unordered pairs including the diagonal
  for (std::size_t j = 0; j < y.size(); ++j) {
    for (std::size_t k = j; k < y.size(); ++k) {
      bset inter = supp[j] & supp[k];
      if (inter.empty()) continue;
      bset rest;
      for (std::size_t l = 0; l < y.size(); ++l)
        if (l != j && l != k) rest = rest | supp[l];
      if ((inter - rest).empty())
        return {false, {}, "clause (ii) fails at pair (" + std::to_string(j) + "," +
                               std::to_string(k) +
                               "): the support intersection is covered by the rest"};
    }
  }

  suitability_cert cert{x, y, std::min(m_max, y.size()), {}};
  for (std::size_t m = 1; m <= cert.m_max; ++m) {
    std::vector<std::size_t> w;
    if (!detail::find_clique(supp, m, w))
      return {false, {}, "clause (i) fails: no " + std::to_string(m) + "-witness"};
    cert.witnesses[m] = std::move(w);
  }
  return {true, std::move(cert), ""};
}

/// Base elements consumed by the m-block construction of find_suitable.
inline std::size_t find_suitable_base_need(std::size_t m_max) {
  std::size_t need = 0;
  for (std::size_t m = 1; m <= m_max; ++m) need += m + m * (m - 1) / 2;
  return need;
}

/// Builds a suitable family block by block: the m-block takes one private
/// base element per member plus one shared "link" element per pair, which
/// makes clause (ii) hold by construction. Blocks use disjoint base
/// elements, so cross-block pairs never meet.
inline bfamily find_suitable(const bfamily& x, std::size_t m_max) {
  if (!is_independent(x)) throw not_independent_error("X is linearly dependent");
  const std::size_t need = find_suitable_base_need(m_max);
  if (x.size() < need)
    throw insufficient_base_error("need " + std::to_string(need) +
                                  " base elements for m_max " + std::to_string(m_max) +
                                  ", have " + std::to_string(x.size()));
  bfamily y;
  std::size_t next = 0;
  for (std::size_t m = 1; m <= m_max; ++m) {
    std::vector<std::size_t> priv(m);
    for (std::size_t j = 0; j < m; ++j) priv[j] = next++;
    // links indexed by pair in colex order
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> link;
    for (std::size_t k = 1; k < m; ++k)
      for (std::size_t j = 0; j < k; ++j) link[{j, k}] = next++;
    for (std::size_t j = 0; j < m; ++j) {
      bset e = x[priv[j]];
      for (std::size_t k = 0; k < m; ++k) {
        if (k == j) continue;
        e = e ^ x[link[{std::min(j, k), std::max(j, k)}]];
      }
      y.push_back(e);
    }
  }
  auto check = check_suitable(x, y, m_max);
  if (!check.ok)
    throw claim_violated_error("constructed family fails its own check: " +
                               check.reason);
  return y;
}

}  // namespace fsw
