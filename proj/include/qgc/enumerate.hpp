#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qgc/int128.hpp"
#include "qgc/polynomial.hpp"

namespace qgc {

// Exhaustive enumeration refuses problems with more variables than this.
inline constexpr std::size_t kEnumerationLimit = 24;

// Bit i of a mask is variable i.
Assignment mask_to_assignment(std::uint64_t mask, std::size_t num_vars);
std::uint64_t assignment_to_mask(std::span<const std::uint8_t> bits);

struct GroundStates {
  Int energy = 0;
  std::size_t num_vars = 0;
  // Minimizing assignments as bit masks, ascending.
  std::vector<std::uint64_t> argmin;

  Assignment assignment(std::size_t i) const { return mask_to_assignment(argmin.at(i), num_vars); }
};

// Exact minimum and full argmin over {0,1}^num_vars. The search space is
// split on the high bits across OpenMP threads; each block is walked in
// Gray-code order with incremental energy updates. The result does not
// depend on the thread count.
GroundStates ground_states(const Polynomial& p, std::size_t num_vars);
GroundStates ground_states(const Polynomial& p);

// Single-threaded reference for ground_states.
GroundStates ground_states_serial(const Polynomial& p, std::size_t num_vars);

// Energy of every assignment, indexed by mask.
std::vector<Int> energy_table(const Polynomial& p, std::size_t num_vars);

// For each setting of the low `kept` variables, the minimum energy over all
// settings of the remaining high variables. Indexed by the low mask.
std::vector<Int> projected_minima(const Polynomial& p, std::size_t num_vars, std::size_t kept);
std::vector<Int> projected_minima_serial(const Polynomial& p, std::size_t num_vars,
                                         std::size_t kept);

}  // namespace qgc
