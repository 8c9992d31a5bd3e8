#pragma once

#include <array>
#include <initializer_list>
#include <random>
#include <vector>

#include "fsw/bset.hpp"
#include "fsw/fs_core.hpp"
#include "fsw/group_elem.hpp"
#include "fsw/torus.hpp"

namespace fswtest {

inline fsw::torus_elem tq(long long num, long long den) {
  return fsw::torus_elem(num, den);
}

/// ge({{0,1,8},{1,1,4}}) = <1/8>_0 + <1/4>_1
inline fsw::group_elem ge(std::initializer_list<std::array<long long, 3>> triples) {
  std::vector<fsw::group_elem::coord> coords;
  for (const auto& t : triples)
    coords.emplace_back(static_cast<std::uint32_t>(t[0]), tq(t[1], t[2]));
  return fsw::group_elem(std::move(coords));
}

/// Random torus rational with denominator from the given pool, never zero.
inline fsw::torus_elem random_torus(std::mt19937_64& rng,
                                    const std::vector<int>& dens) {
  int den = dens[rng() % dens.size()];
  long long num = 1 + static_cast<long long>(rng() % (den - 1));
  return fsw::torus_elem(num, den);
}

/// Random group element on up to max_coords of the first index_bound
/// coordinates (possibly zero when coords = 0 is drawn).
inline fsw::group_elem random_elem(std::mt19937_64& rng, std::size_t max_coords,
                                   std::uint32_t index_bound,
                                   const std::vector<int>& dens) {
  std::size_t n = rng() % (max_coords + 1);
  std::vector<fsw::group_elem::coord> coords;
  for (std::size_t i = 0; i < n; ++i)
    coords.emplace_back(static_cast<std::uint32_t>(rng() % index_bound),
                        random_torus(rng, dens));
  return fsw::group_elem(std::move(coords));
}

inline fsw::fin_seq random_seq(std::mt19937_64& rng, std::size_t max_len,
                               std::size_t max_coords, std::uint32_t index_bound,
                               const std::vector<int>& dens) {
  std::size_t len = rng() % (max_len + 1);
  fsw::fin_seq out;
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(random_elem(rng, max_coords, index_bound, dens));
  return out;
}

inline fsw::bset bs(std::initializer_list<unsigned> members) {
  return fsw::bset(members);
}

/// Random nonzero subset of the first `universe` indices.
inline fsw::bset random_bset(std::mt19937_64& rng, unsigned universe) {
  std::uint64_t mask = 0;
  while (mask == 0)
    mask = rng() & ((universe >= 64) ? ~std::uint64_t(0)
                                     : ((std::uint64_t(1) << universe) - 1));
  return fsw::bset(mask);
}

/// Random independent family of the requested size.
inline fsw::bfamily random_independent(std::mt19937_64& rng, unsigned universe,
                                       std::size_t size) {
  fsw::bfamily fam;
  std::vector<std::uint64_t> rows;
  while (fam.size() < size) {
    fsw::bset v = random_bset(rng, universe);
    std::uint64_t w = v.mask();
    for (std::uint64_t r : rows) {
      std::uint64_t lead = r & ~(r - 1);
      if (w & lead) w ^= r;
    }
    if (w) {
      rows.push_back(w);
      fam.push_back(v);
    }
  }
  return fam;
}

}  // namespace fswtest
