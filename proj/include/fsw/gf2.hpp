#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fsw/bset.hpp"
#include "fsw/errors.hpp"

namespace fsw {

/// Row echelon form of a family over GF(2), remembering for every pivot row
/// which original positions combine into it. Solves membership and support
/// queries against the family.
class gf2_solver {
 public:
  explicit gf2_solver(const bfamily& x) : family_size_(x.size()) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::uint64_t v = x[i].mask(), combo = std::uint64_t(1) << i;
      reduce(v, combo);
      if (v) rows_.push_back({v, combo});
    }
  }

  std::size_t rank() const { return rows_.size(); }
  bool independent() const { return rows_.size() == family_size_; }

  /// Positions (as a bset over family indices) of the unique subfamily
  /// summing to y, or nullopt when y is outside the span. Requires an
  /// independent family for uniqueness.
  std::optional<bset> solve(bset y) const {
    std::uint64_t v = y.mask(), combo = 0;
    reduce(v, combo);
    if (v) return std::nullopt;
    return bset(combo);
  }

  bool in_span(bset y) const {
    std::uint64_t v = y.mask(), combo = 0;
    reduce(v, combo);
    return v == 0;
  }

 private:
  struct row {
    std::uint64_t vec, combo;
  };

  void reduce(std::uint64_t& v, std::uint64_t& combo) const {
    for (const row& r : rows_) {
      std::uint64_t lead = r.vec & ~(r.vec - 1);  // lowest set bit as pivot
      if (v & lead) {
        v ^= r.vec;
        combo ^= r.combo;
      }
    }
  }

  std::vector<row> rows_;
  std::size_t family_size_;
};

/// True iff no nonempty subfamily sums to the empty set.
inline bool is_independent(const bfamily& x) { return gf2_solver(x).independent(); }

/// Greedy basis of the span: keeps each member that is independent from the
/// ones kept so far (leftmost-pivot rule). An independent family is
/// returned unchanged.
inline bfamily extract_basis(const bfamily& y) {
  bfamily out;
  std::vector<std::uint64_t> rows;
  for (bset v : y) {
    std::uint64_t w = v.mask();
    for (std::uint64_t r : rows) {
      std::uint64_t lead = r & ~(r - 1);
      if (w & lead) w ^= r;
    }
    if (w) {
      rows.push_back(w);
      out.push_back(v);
    }
  }
  return out;
}

/// The unique subfamily of the independent X summing to y, as positions
/// into X. x_support(X, {}) = {}.
inline bset x_support(const bfamily& x, bset y) {
  gf2_solver solver(x);
  if (!solver.independent()) throw not_independent_error("X is linearly dependent");
  auto s = solver.solve(y);
  if (!s) throw not_in_span_error("element " + y.str() + " is outside span(X)");
  return *s;
}

/// Same data as x_support, under the name of the canonical map.
inline bset psi_map(const bfamily& x, bset y) { return x_support(x, y); }

inline bool is_pairwise_disjoint_supports(const bfamily& x, const bfamily& z) {
  gf2_solver solver(x);
  if (!solver.independent()) throw not_independent_error("X is linearly dependent");
  std::vector<bset> supp;
  supp.reserve(z.size());
  for (bset v : z) {
    auto s = solver.solve(v);
    if (!s) throw not_in_span_error("element " + v.str() + " is outside span(X)");
    supp.push_back(*s);
  }
  for (std::size_t i = 0; i < supp.size(); ++i)
    for (std::size_t j = i + 1; j < supp.size(); ++j)
      if (!(supp[i] & supp[j]).empty()) return false;
  return true;
}

struct sparse_split_result {
  std::vector<bset> b0, b1;  // the two cells of FS(Z)
  bfamily w0, w1;            // the complementary generator halves
};

/// Splits FS(Z) by whether the Z-support meets Zprime; each half of the
/// generators then has its FS-set disjoint from the matching cell.
inline sparse_split_result sparse_split(const bfamily& z, bset zprime) {
  if (!is_independent(z)) throw not_independent_error("Z is linearly dependent");
  const std::uint64_t all = (z.size() == 64) ? ~std::uint64_t(0)
                                             : (std::uint64_t(1) << z.size()) - 1;
  if (zprime.empty() || (zprime.mask() & ~all) || zprime.mask() == all)
    throw bad_split_error("Zprime must be a proper nonempty subset of the positions");
  detail::check_family_cap(z);
  sparse_split_result out;
  std::vector<bset> sums(std::size_t(1) << z.size());
  for (std::size_t m = 1; m < sums.size(); ++m) {
    sums[m] = sums[m & (m - 1)] ^ z[std::countr_zero(m)];
    // independence makes the generating mask the Z-support
    if (m & zprime.mask())
      out.b0.push_back(sums[m]);
    else
      out.b1.push_back(sums[m]);
  }
  std::sort(out.b0.begin(), out.b0.end());
  std::sort(out.b1.begin(), out.b1.end());
  for (std::size_t i = 0; i < z.size(); ++i)
    (zprime.contains(static_cast<unsigned>(i)) ? out.w1 : out.w0).push_back(z[i]);
  return out;
}

}  // namespace fsw
