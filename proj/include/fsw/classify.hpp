#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsw/fs_core.hpp"
#include "fsw/group_elem.hpp"

namespace fsw {

enum class element_class { order2, order3, order4, q0, q1 };

inline const char* to_string(element_class c) {
  switch (c) {
    case element_class::order2: return "Order2";
    case element_class::order3: return "Order3";
    case element_class::order4: return "Order4";
    case element_class::q0: return "Q0";
    case element_class::q1: return "Q1";
  }
  return "?";
}

/// Case split on a nonzero element: its order when that is 2, 3 or 4, and
/// otherwise Q1 or Q0 according to whether the rho-coordinate lies in
/// {1/8, -1/8, 3/8, -3/8}.
inline element_class classify_element(const group_elem& x) {
  if (x.is_zero()) throw zero_element_error("classify_element of the zero element");
  bigint o = x.order();
  if (o == 2) return element_class::order2;
  if (o == 3) return element_class::order3;
  if (o == 4) return element_class::order4;
  return x.proj(x.rho()).eighth_class() ? element_class::q1 : element_class::q0;
}

namespace detail {

// numerator i of the rho-coordinate i/8, for elements of Q1
inline int eighth_numerator(const group_elem& x) {
  torus_elem t = x.proj(x.rho());
  return static_cast<int>(t.den() == 8 ? t.num() : bigint(0));
}

// FS(seq) must lie inside Q_i = {x : order(x) > 4 and the rho-coordinate
// equals i/8}
inline void require_fs_in_qi(const fin_seq& seq, int i) {
  if (i != 1 && i != -1 && i != 3 && i != -3)
    throw std::invalid_argument("i must be one of 1, -1, 3, -3");
  for (const auto& w : fs_set(seq)) {
    if (w.order() <= 4)
      throw hypothesis_error("FS element " + w.str() + " has order " +
                             w.order().str() + " <= 4");
    if (eighth_numerator(w) != i)
      throw hypothesis_error("FS element " + w.str() +
                             " has rho-coordinate outside Q_" + std::to_string(i));
  }
}

}  // namespace detail

/// Permutation of `seq` sorted by rho. Under the hypothesis FS(seq) in Q_i
/// no rho value can repeat three times, so the order is strict two apart.
inline fin_seq arrange_by_rho(const fin_seq& seq, int i) {
  detail::require_fs_in_qi(seq, i);
  fin_seq out = seq;
  std::stable_sort(out.begin(), out.end(), [](const group_elem& a, const group_elem& b) {
    return a.rho() < b.rho();
  });
  std::map<std::uint32_t, std::size_t> bucket;
  for (const auto& x : out) ++bucket[x.rho()];
  for (const auto& [j, count] : bucket)
    if (count > 2)
      throw claim_violated_error("rho bucket " + std::to_string(j) + " holds " +
                                 std::to_string(count) + " elements");
  return out;
}

/// Least index in M where x projects nonzero.
inline std::uint32_t tau(const group_elem& x, const std::vector<std::uint32_t>& m_set) {
  std::vector<std::uint32_t> sorted = m_set;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint32_t j : sorted)
    if (!x.proj(j).is_zero()) return j;
  throw no_nonzero_error("x projects to zero on every index of M");
}

struct zero_on_previous_result {
  bool ok = true;
  std::size_t n = 0, m = 0;  // first violating pair when !ok
};

/// For an arranged sequence, later elements must vanish on the rho
/// coordinates of strictly earlier ones.
inline zero_on_previous_result check_zero_on_previous_rho(const fin_seq& seq, int i) {
  detail::require_fs_in_qi(seq, i);
  for (std::size_t n = 0; n + 1 < seq.size(); ++n)
    if (seq[n].rho() > seq[n + 1].rho())
      throw hypothesis_error("sequence is not arranged by rho");
  for (std::size_t n = 0; n < seq.size(); ++n)
    for (std::size_t m = n + 1; m < seq.size(); ++m)
      if (seq[n].rho() < seq[m].rho() && !seq[m].proj(seq[n].rho()).is_zero())
        return {false, n, m};
  return {};
}

}  // namespace fsw
