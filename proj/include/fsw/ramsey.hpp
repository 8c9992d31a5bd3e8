#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsw/adequacy.hpp"
#include "fsw/bset.hpp"
#include "fsw/errors.hpp"

namespace fsw {

/// Total coloring of the nonempty subsets of {0..ground-1}. cells[k] is the
/// color of the subset with bitmask k+1 (colex order).
struct coloring {
  unsigned ground = 0;
  unsigned colors = 2;
  std::vector<std::uint8_t> cells;

  std::uint8_t at(std::uint64_t mask) const { return cells[mask - 1]; }
  std::size_t cell_count() const { return (std::size_t(1) << ground) - 1; }
};

struct mono_fu {
  std::vector<bset> parts;  // pairwise disjoint nonempty subsets of the ground set
  unsigned color = 0;
};

/// First (in ascending mask order) m-sequence of pairwise disjoint nonempty
/// subsets whose whole FU-set is one color.
inline std::optional<mono_fu> find_monochromatic_fu(const coloring& c, std::size_t m) {
  if (c.cells.size() != c.cell_count())
    throw parse_error("coloring cell table has the wrong size");
  const std::uint64_t total = c.cell_count();
  std::vector<std::uint64_t> parts;
  std::vector<std::uint64_t> unions;  // all nonempty unions of the chosen parts
  int color = -1;
  auto rec = [&](auto&& self, std::uint64_t start) -> bool {
    if (parts.size() == m) return true;
    for (std::uint64_t b = start; b <= total; ++b) {
      bool disj = true;
      for (std::uint64_t p : parts)
        if (p & b) {
          disj = false;
          break;
        }
      if (!disj) continue;
      int col = parts.empty() ? c.at(b) : color;
      if (c.at(b) != col) continue;
      bool mono = true;
      const std::size_t base = unions.size();
      for (std::size_t i = 0; i < base; ++i) {
        if (c.at(unions[i] | b) != col) {
          mono = false;
          break;
        }
        unions.push_back(unions[i] | b);
      }
      if (mono) {
        unions.push_back(b);
        parts.push_back(b);
        int saved = color;
        color = col;
        if (self(self, b + 1)) return true;
        color = saved;
        parts.pop_back();
      }
      unions.resize(base);
    }
    return false;
  };
  if (m == 0 || !rec(rec, 1)) return std::nullopt;
  mono_fu out;
  out.color = static_cast<unsigned>(color);
  for (std::uint64_t p : parts) out.parts.emplace_back(bset(p));
  return out;
}

struct folkman_result {
  std::optional<unsigned> value;         // least ground size that forces, if found
  std::optional<coloring> avoiding_prev; // avoiding coloring one below the answer,
                                         // or at the exhausted bound
};

namespace detail {

// Exhaustive search for a coloring with no monochromatic FU of m disjoint
// sets. DFS over cells in ascending mask order, the first cell's color
// fixed to 0 (color-permutation symmetry). A branch is cut exactly when the
// newly colored cell completes a monochromatic FU whose total union is that
// cell, which is the first moment any monochromatic FU becomes fully
// colored.
class avoiding_search {
 public:
  avoiding_search(unsigned ground, unsigned colors, std::size_t m)
      : ground_(ground), colors_(colors), m_(m),
        total_((std::uint64_t(1) << ground) - 1), cells_(total_, 0) {}

  std::optional<coloring> run() {
    if (!dfs(1)) return std::nullopt;
    return coloring{ground_, colors_, cells_};
  }

 private:
  bool completes(std::uint64_t s, std::uint8_t col) {
    // is s the disjoint union of m nonempty parts, every partial union
    // colored col? parts are found lowest-remaining-bit first
    scratch_.clear();
    return split(s, m_, col);
  }

  bool split(std::uint64_t rest, std::size_t k, std::uint8_t col) {
    if (k == 1) {
      if (rest == 0) return false;
      // the cell being assigned counts as already having color col
      if (rest != s_being_assigned_ && cells_[rest - 1] != col) return false;
      for (std::uint64_t u : scratch_) {
        std::uint64_t full = u | rest;
        if (full != s_being_assigned_ && cells_[full - 1] != col) return false;
      }
      return true;
    }
    if (rest == 0) return false;
    const std::uint64_t low = rest & -rest;
    // first part takes the lowest remaining bit plus any subset of the rest
    const std::uint64_t others = rest ^ low;
    for (std::uint64_t sub = others;; sub = (sub - 1) & others) {
      std::uint64_t part = low | sub;
      if (cells_[part - 1] == col) {
        bool ok = true;
        const std::size_t base = scratch_.size();
        for (std::size_t i = 0; i < base; ++i) {
          std::uint64_t u = scratch_[i] | part;
          if (u != s_being_assigned_ && cells_[u - 1] != col) {
            ok = false;
            break;
          }
          scratch_.push_back(u);
        }
        if (ok) {
          scratch_.push_back(part);
          if (split(rest ^ part, k - 1, col)) return true;
          scratch_.pop_back();
        }
        scratch_.resize(base);
      }
      if (sub == 0) break;
    }
    return false;
  }

  bool dfs(std::uint64_t s) {
    if (s > total_) return true;
    s_being_assigned_ = s;
    const unsigned limit = (s == 1) ? 1 : colors_;
    for (unsigned c = 0; c < limit; ++c) {
      if (completes(s, static_cast<std::uint8_t>(c))) continue;
      cells_[s - 1] = static_cast<std::uint8_t>(c);
      if (dfs(s + 1)) return true;
    }
    return false;
  }

  unsigned ground_, colors_;
  std::size_t m_;
  std::uint64_t total_;
  std::vector<std::uint8_t> cells_;
  std::vector<std::uint64_t> scratch_;
  std::uint64_t s_being_assigned_ = 0;
};

}  // namespace detail

/// Least ground size M <= ground_max such that every `colors`-coloring of
/// the nonempty subsets of {0..M-1} contains a monochromatic FU of m
/// disjoint nonempty sets. The avoiding coloring at M-1 (or at ground_max
/// when the search exhausts) is returned as the certificate.
inline folkman_result folkman_number(std::size_t m, unsigned colors,
                                     unsigned ground_max) {
  if (m == 0 || colors == 0)
    throw std::invalid_argument("folkman_number needs m >= 1 and colors >= 1");
  folkman_result out;
  // the empty ground set vacuously admits an avoiding (empty) coloring
  out.avoiding_prev = coloring{0, colors, {}};
  for (unsigned ground = 1; ground <= ground_max; ++ground) {
    detail::avoiding_search search(ground, colors, m);
    auto avoiding = search.run();
    if (!avoiding) {
      out.value = ground;
      return out;
    }
    out.avoiding_prev = std::move(avoiding);
  }
  return out;  // exhausted; avoiding_prev holds the witness at ground_max
}

/// The partition step: color the nonempty subsets of the witness index set
/// by which cell the corresponding sum lands in, extract a monochromatic
/// FU, and condense the witness along it. Returns the adequate cell with
/// its revalidated m-witness.
inline std::pair<int, adequacy_witness> partition_adequate(
    const std::vector<bset>& a, const std::vector<bset>& a0,
    const std::vector<xy_pair>& pairs, std::size_t m,
    const adequacy_witness& m_witness) {
  auto in_a = ambient_of(a);
  auto in_a0 = ambient_of(a0);
  for (bset v : a0)
    if (!in_a(v)) throw hypothesis_error("A0 is not a subset of A");
  auto same_pair = [](const xy_pair& p, const xy_pair& q) {
    return p.x == q.x && p.y == q.y;
  };
  if (pairs.size() != m_witness.pairs.size() ||
      !std::equal(pairs.begin(), pairs.end(), m_witness.pairs.begin(), same_pair))
    throw hypothesis_error("witness was produced for a different pair family");
  auto base = validate_adequacy_witness(in_a, m_witness);
  if (!base.ok) throw hypothesis_error("M-witness invalid: " + base.reason);

  const std::size_t big_m = m_witness.m;
  coloring c{static_cast<unsigned>(big_m), 2, {}};
  c.cells.resize((std::size_t(1) << big_m) - 1);
  std::vector<bset> sums(std::size_t(1) << big_m);
  for (std::uint64_t mask = 1; mask < sums.size(); ++mask) {
    sums[mask] = sums[mask & (mask - 1)] ^ m_witness.a_seq[std::countr_zero(mask)];
    c.cells[mask - 1] = in_a0(sums[mask]) ? 0 : 1;
  }
  auto fu = find_monochromatic_fu(c, m);
  if (!fu)
    throw insufficient_m_error("no monochromatic FU of " + std::to_string(m) +
                               " sets: M = " + std::to_string(big_m) +
                               " is below the needed bound");
  std::vector<std::vector<std::size_t>> parts;
  for (bset p : fu->parts) {
    std::vector<std::size_t> idx;
    for (unsigned e : p.members()) idx.push_back(e);
    parts.push_back(std::move(idx));
  }
  auto condensed = condense_witness(in_a, m_witness, parts);
  // the cell the condensed witness certifies
  ambient_pred in_cell = fu->color == 0
                             ? in_a0
                             : ambient_pred([&in_a, &in_a0](bset v) {
                                 return in_a(v) && !in_a0(v);
                               });
  auto cell_check = validate_adequacy_witness(in_cell, condensed);
  if (!cell_check.ok)
    throw claim_violated_error("condensed witness fails inside its cell: " +
                               cell_check.reason);
  return {static_cast<int>(fu->color), std::move(condensed)};
}

/// Least pair of positions holding equal tags: the pair that completes
/// first, i.e. smallest second index, then smallest first.
template <class T>
std::optional<std::pair<std::size_t, std::size_t>> pigeonhole_collision(
    const std::vector<T>& tags) {
  for (std::size_t j = 1; j < tags.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (tags[i] == tags[j]) return std::make_pair(i, j);
  return std::nullopt;
}

}  // namespace fsw
