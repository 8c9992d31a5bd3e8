#pragma once

#include <cstddef>

namespace fsw::config {

// Enumeration caps. Operations that walk all subsets of a sequence reject
// inputs longer than fs_cap (2^n sums); the weighted-sum checks reject
// inputs longer than two_uniq_cap (3^n assignments). The CLI --cap flag
// overrides both.
inline std::size_t fs_cap = 20;
inline std::size_t two_uniq_cap = 13;

// Largest coordinate index a group element may use.
inline std::size_t index_cap = 64;

// Boolean-group universe: members of a bset read from external input must
// be below this bound. Internal representation is a 64-bit mask, so the
// bound can only be lowered.
inline std::size_t universe_bound = 64;

}  // namespace fsw::config
