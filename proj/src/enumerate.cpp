#include "qgc/enumerate.hpp"

#include <algorithm>

#include <omp.h>

#include "qgc/errors.hpp"

namespace qgc {

Assignment mask_to_assignment(std::uint64_t mask, std::size_t num_vars) {
  Assignment bits(num_vars, 0);
  for (std::size_t i = 0; i < num_vars; ++i) bits[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
  return bits;
}

std::uint64_t assignment_to_mask(std::span<const std::uint8_t> bits) {
  if (bits.size() > 64) fail(ErrorKind::Dimension, "assignment too wide for a 64-bit mask");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) mask |= std::uint64_t{1} << i;
  return mask;
}

namespace {

void check_enumerable(const Polynomial& p, std::size_t num_vars) {
  if (num_vars > kEnumerationLimit) {
    fail(ErrorKind::ResourceLimit, "exhaustive enumeration limited to " +
                                       std::to_string(kEnumerationLimit) + " variables, got " +
                                       std::to_string(num_vars));
  }
  if (p.variable_span() > num_vars) {
    fail(ErrorKind::Dimension, "polynomial references variables beyond num_vars");
  }
}

// Polynomial compiled to bit masks for O(terms touching x_j) flips.
class GrayWalker {
 public:
  explicit GrayWalker(const Polynomial& p, std::size_t num_vars) : touching_(num_vars) {
    for (const auto& [m, c] : p.terms()) {
      if (m.empty()) {
        constant_ = c;
        continue;
      }
      std::uint64_t mask = 0;
      for (VarId v : m) mask |= std::uint64_t{1} << v;
      const auto idx = static_cast<std::uint32_t>(masks_.size());
      masks_.push_back(mask);
      coeffs_.push_back(c);
      for (VarId v : m) touching_[v].push_back(idx);
    }
  }

  Int energy_at(std::uint64_t state) const {
    Int e = constant_;
    for (std::size_t t = 0; t < masks_.size(); ++t)
      if ((state & masks_[t]) == masks_[t]) e += coeffs_[t];
    return e;
  }

  // Energy change from flipping variable j in state.
  Int flip_delta(std::uint64_t state, std::size_t j) const {
    const std::uint64_t bit = std::uint64_t{1} << j;
    Int delta = 0;
    for (std::uint32_t t : touching_[j]) {
      const std::uint64_t others = masks_[t] & ~bit;
      if ((state & others) == others) delta += coeffs_[t];
    }
    return (state & bit) ? -delta : delta;
  }

  // Visits every mask whose high bits equal `prefix` (bits >= low_bits).
  template <typename Visit>
  void walk_block(std::uint64_t prefix, std::size_t low_bits, Visit&& visit) const {
    std::uint64_t state = prefix;
    Int energy = energy_at(state);
    visit(state, energy);
    const std::uint64_t count = std::uint64_t{1} << low_bits;
    for (std::uint64_t i = 1; i < count; ++i) {
      const auto j = static_cast<std::size_t>(__builtin_ctzll(i));
      energy += flip_delta(state, j);
      state ^= std::uint64_t{1} << j;
      visit(state, energy);
    }
  }

 private:
  Int constant_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<Int> coeffs_;
  std::vector<std::vector<std::uint32_t>> touching_;
};

struct BlockMin {
  Int energy = kIntMax;
  std::vector<std::uint64_t> argmin;

  void offer(std::uint64_t state, Int e) {
    if (e < energy) {
      energy = e;
      argmin.clear();
    }
    if (e == energy) argmin.push_back(state);
  }
};

GroundStates finish(std::vector<BlockMin>& blocks, std::size_t num_vars) {
  GroundStates out;
  out.num_vars = num_vars;
  out.energy = kIntMax;
  for (const auto& b : blocks) out.energy = std::min(out.energy, b.energy);
  for (auto& b : blocks)
    if (b.energy == out.energy) out.argmin.insert(out.argmin.end(), b.argmin.begin(), b.argmin.end());
  std::sort(out.argmin.begin(), out.argmin.end());
  return out;
}

std::size_t split_bits(std::size_t num_vars) { return std::min<std::size_t>(num_vars, 6); }

}  // namespace

GroundStates ground_states(const Polynomial& p, std::size_t num_vars) {
  check_enumerable(p, num_vars);
  const GrayWalker walker(p, num_vars);
  const std::size_t high = split_bits(num_vars);
  const std::size_t low = num_vars - high;
  const auto blocks_n = static_cast<std::int64_t>(std::uint64_t{1} << high);
  std::vector<BlockMin> blocks(static_cast<std::size_t>(blocks_n));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < blocks_n; ++b) {
    auto& block = blocks[static_cast<std::size_t>(b)];
    walker.walk_block(static_cast<std::uint64_t>(b) << low, low,
                      [&](std::uint64_t s, Int e) { block.offer(s, e); });
  }
  return finish(blocks, num_vars);
}

GroundStates ground_states(const Polynomial& p) { return ground_states(p, p.variable_span()); }

GroundStates ground_states_serial(const Polynomial& p, std::size_t num_vars) {
  check_enumerable(p, num_vars);
  const GrayWalker walker(p, num_vars);
  std::vector<BlockMin> blocks(1);
  walker.walk_block(0, num_vars, [&](std::uint64_t s, Int e) { blocks[0].offer(s, e); });
  return finish(blocks, num_vars);
}

std::vector<Int> energy_table(const Polynomial& p, std::size_t num_vars) {
  check_enumerable(p, num_vars);
  const GrayWalker walker(p, num_vars);
  std::vector<Int> table(std::size_t{1} << num_vars);
  walker.walk_block(0, num_vars, [&](std::uint64_t s, Int e) { table[s] = e; });
  return table;
}

std::vector<Int> projected_minima(const Polynomial& p, std::size_t num_vars, std::size_t kept) {
  check_enumerable(p, num_vars);
  if (kept > num_vars) fail(ErrorKind::InvalidArgument, "kept variables exceed num_vars");
  const GrayWalker walker(p, num_vars);
  const std::size_t high = std::min(split_bits(num_vars), num_vars - kept);
  const std::size_t low = num_vars - high;
  const std::uint64_t kept_mask = (std::uint64_t{1} << kept) - 1;
  const auto blocks_n = static_cast<std::int64_t>(std::uint64_t{1} << high);
  const std::size_t width = std::size_t{1} << kept;
  std::vector<Int> best(width, kIntMax);

#pragma omp parallel
  {
    std::vector<Int> local(width, kIntMax);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < blocks_n; ++b) {
      walker.walk_block(static_cast<std::uint64_t>(b) << low, low, [&](std::uint64_t s, Int e) {
        auto& slot = local[s & kept_mask];
        if (e < slot) slot = e;
      });
    }
#pragma omp critical
    for (std::size_t i = 0; i < width; ++i) best[i] = std::min(best[i], local[i]);
  }
  return best;
}

std::vector<Int> projected_minima_serial(const Polynomial& p, std::size_t num_vars,
                                         std::size_t kept) {
  check_enumerable(p, num_vars);
  if (kept > num_vars) fail(ErrorKind::InvalidArgument, "kept variables exceed num_vars");
  const GrayWalker walker(p, num_vars);
  const std::uint64_t kept_mask = (std::uint64_t{1} << kept) - 1;
  std::vector<Int> best(std::size_t{1} << kept, kIntMax);
  walker.walk_block(0, num_vars, [&](std::uint64_t s, Int e) {
    auto& slot = best[s & kept_mask];
    if (e < slot) slot = e;
  });
  return best;
}

}  // namespace qgc
