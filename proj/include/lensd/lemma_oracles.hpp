#pragma once

#include "lensd/report.hpp"

#include <cstdint>
#include <optional>

namespace lensd {

// H(i) = [h0 + i n]_p on {0, .., p-1}, with threshold C. The step n is kept
// in its centered representative, (-p/2, p/2].
struct StepFunctionSpec {
  std::int64_t p = 1;
  std::int64_t h0 = 0;
  std::int64_t n = 0;
  std::int64_t threshold = 2;

  static StepFunctionSpec make(std::int64_t p, std::int64_t h0, std::int64_t n,
                               std::int64_t threshold);

  std::int64_t operator()(std::int64_t i) const;

  // H(i) < C <=> i < C for every i in [0, p).
  bool satisfies_threshold_condition() const;

  bool is_identity() const;    // H(i) = i
  bool is_reflection() const;  // H(i) = [C - 1 - i]_p

  // H^(i) = [H(i + C) - C]_p with threshold p - C.
  StepFunctionSpec shifted_by_threshold() const;

  friend bool operator==(const StepFunctionSpec&, const StepFunctionSpec&) = default;
};

// The index where the argument for C <= p/2 and |n| >= 2 expects the
// condition to break: floor((C - H(0))/n) + 1 for n >= 2 and
// floor(H(0)/|n|) + 1 for n <= -2. Empty outside that case or when H(0) >= C.
std::optional<std::int64_t> step_escape_index(const StepFunctionSpec& spec);

// Exhaustive (h0, n, C) grid for one p >= 4.
SweepReport check_step_function_grid(std::int64_t p);

// Exhaustive (x, y, X, Y, C) grid for one p >= 4, y and Y units.
SweepReport check_affine_pair_grid(std::int64_t p);

// Precomposing with m(i) = (i - x) y' turns [X + mY]_p into the step
// function with h0 = [X - x y' Y]_p and n = [y' Y]_p. No checking.
StepFunctionSpec rescale_to_step_function(std::int64_t x, std::int64_t y, std::int64_t big_x,
                                          std::int64_t big_y, std::int64_t p,
                                          std::int64_t threshold = 2);

// As above, and asserts F(m(i)) = H(i) for every i (InternalInconsistency).
// Throws NotCoprime when y or Y is not a unit.
StepFunctionSpec rescaling_witness(std::int64_t x, std::int64_t y, std::int64_t big_x,
                                          std::int64_t big_y, std::int64_t p,
                                          std::int64_t threshold = 2);

}  // namespace lensd
