#include "lensd/lemma_oracles.hpp"

#include "lensd/errors.hpp"
#include "lensd/modarith.hpp"

#include <map>
#include <vector>
#include <string>

namespace lensd {

StepFunctionSpec StepFunctionSpec::make(std::int64_t p, std::int64_t h0, std::int64_t n,
                                        std::int64_t threshold) {
  if (p < 1) throw InvalidArgument("step function needs p >= 1");
  return StepFunctionSpec{p, rep(h0, p), centered_rep(n, p), threshold};
}

std::int64_t StepFunctionSpec::operator()(std::int64_t i) const {
  return rep(h0 + mul_mod(i, n, p), p);
}

bool StepFunctionSpec::satisfies_threshold_condition() const {
  std::int64_t value = h0;
  const std::int64_t step = rep(n, p);
  for (std::int64_t i = 0; i < p; ++i) {
    if ((value < threshold) != (i < threshold)) return false;
    value += step;
    if (value >= p) value -= p;
  }
  return true;
}

bool StepFunctionSpec::is_identity() const { return h0 == 0 && rep(n - 1, p) == 0; }

bool StepFunctionSpec::is_reflection() const {
  return h0 == rep(threshold - 1, p) && rep(n + 1, p) == 0;
}

StepFunctionSpec StepFunctionSpec::shifted_by_threshold() const {
  return make(p, (*this)(threshold)-threshold, n, p - threshold);
}

std::optional<std::int64_t> step_escape_index(const StepFunctionSpec& spec) {
  if (2 * spec.threshold > spec.p || spec.h0 >= spec.threshold) return std::nullopt;
  if (spec.n >= 2) return (spec.threshold - spec.h0) / spec.n + 1;
  if (spec.n <= -2) return spec.h0 / -spec.n + 1;
  return std::nullopt;
}

namespace {

void require_p_at_least_4(std::int64_t p) {
  if (p < 4) throw InvalidArgument("lemma oracles need p >= 4, got " + std::to_string(p));
}

std::string spec_name(const StepFunctionSpec& s) {
  return "(p=" + std::to_string(s.p) + ", h0=" + std::to_string(s.h0) +
         ", n=" + std::to_string(s.n) + ", C=" + std::to_string(s.threshold) + ")";
}

}  // namespace

SweepReport check_step_function_grid(std::int64_t p) {
  require_p_at_least_4(p);
  SweepReport report;
  report.suite = "lemma4";
  SweepReport::Row row{"p=" + std::to_string(p), 0, 0};
  std::map<std::int64_t, std::int64_t> satisfiers;  // C -> count
  std::int64_t escape_misses = 0;
  std::string miss_examples;

  for (std::int64_t c = 2; c <= p - 2; ++c) {
    satisfiers[c] = 0;
    for (std::int64_t h0 = 0; h0 < p; ++h0) {
      for (std::int64_t step = 0; step < p; ++step) {
        const StepFunctionSpec spec = StepFunctionSpec::make(p, h0, step, c);
        ++row.checked;
        bool ok = true;
        const bool holds = spec.satisfies_threshold_condition();
        if (holds) {
          ++satisfiers[c];
          if (!spec.is_identity() && !spec.is_reflection()) {
            ok = false;
            report.fail(spec_name(spec) + " satisfies the condition but is neither i nor C-1-i");
          }
        }
        if (spec.shifted_by_threshold().satisfies_threshold_condition() != holds) {
          ok = false;
          report.fail(spec_name(spec) + ": threshold shift does not preserve the condition");
        }
        // The proof's escape index is not part of the lemma's statement; where
        // it misses (i0 outside (0, C), or H(i0) wrapping past p) the
        // condition still fails elsewhere, so misses are tallied, not failed.
        if (auto i0 = step_escape_index(spec)) {
          if (*i0 <= 0 || *i0 >= c || spec(*i0) < c) {
            ++escape_misses;
            if (holds) {
              ok = false;
              report.fail(spec_name(spec) + ": satisfies the condition with |n| >= 2");
            }
            if (miss_examples.size() < 120) miss_examples += spec_name(spec) + " ";
          }
        }
        if (ok) ++row.passed;
      }
    }
  }
  report.rows.push_back(row);

  std::string counts;
  for (const auto& [c, count] : satisfiers) {
    if (!counts.empty()) counts += " ";
    counts += "C=" + std::to_string(c) + ":" + std::to_string(count);
  }
  report.note("satisfiers p=" + std::to_string(p), counts);
  if (escape_misses > 0) {
    report.note("escape_index_misses p=" + std::to_string(p),
                std::to_string(escape_misses) + " e.g. " + miss_examples);
  }
  return report;
}

StepFunctionSpec rescale_to_step_function(std::int64_t x, std::int64_t y, std::int64_t big_x,
                                          std::int64_t big_y, std::int64_t p,
                                          std::int64_t threshold) {
  const std::int64_t y_inv = mod_inv(y, p).value;
  const std::int64_t step = mul_mod(y_inv, big_y, p);
  return StepFunctionSpec::make(p, big_x - mul_mod(x, step, p), step, threshold);
}

StepFunctionSpec rescaling_witness(std::int64_t x, std::int64_t y, std::int64_t big_x,
                                          std::int64_t big_y, std::int64_t p,
                                          std::int64_t threshold) {
  if (!is_unit(big_y, p)) {
    throw NotCoprime(std::to_string(big_y) + " is not a unit modulo " + std::to_string(p));
  }
  const StepFunctionSpec spec = rescale_to_step_function(x, y, big_x, big_y, p, threshold);
  const std::int64_t y_inv = mod_inv(y, p).value;
  for (std::int64_t i = 0; i < p; ++i) {
    const std::int64_t m = mul_mod(i - x, y_inv, p);
    const std::int64_t direct = rep(big_x + mul_mod(m, big_y, p), p);
    if (direct != spec(i)) {
      throw InternalInconsistency("rescaling witness disagrees with direct evaluation at i=" +
                                  std::to_string(i));
    }
  }
  return spec;
}

SweepReport check_affine_pair_grid(std::int64_t p) {
  require_p_at_least_4(p);
  SweepReport report;
  report.suite = "lemma5";
  SweepReport::Row row{"p=" + std::to_string(p), 0, 0};
  std::int64_t satisfying = 0;

  std::vector<std::int64_t> units;
  for (std::int64_t u = 1; u < p; ++u) {
    if (is_unit(u, p)) units.push_back(u);
  }

  auto name = [p](std::int64_t x, std::int64_t y, std::int64_t bx, std::int64_t by,
                  std::int64_t c) {
    return "(p=" + std::to_string(p) + ", x=" + std::to_string(x) + ", y=" + std::to_string(y) +
           ", X=" + std::to_string(bx) + ", Y=" + std::to_string(by) + ", C=" + std::to_string(c) +
           ")";
  };

  for (std::int64_t c = 2; c <= p - 2; ++c) {
    for (std::int64_t x = 0; x < p; ++x) {
      for (std::int64_t y : units) {
        for (std::int64_t bx = 0; bx < p; ++bx) {
          for (std::int64_t by : units) {
            ++row.checked;
            bool ok = true;
            bool holds = true;
            std::int64_t small = x;
            std::int64_t big = bx;
            for (std::int64_t m = 0; m < p && holds; ++m) {
              holds = (small < c) == (big < c);
              small += y;
              if (small >= p) small -= p;
              big += by;
              if (big >= p) big -= p;
            }
            if (rescale_to_step_function(x, y, bx, by, p, c).satisfies_threshold_condition() !=
                holds) {
              ok = false;
              report.fail(name(x, y, bx, by, c) + ": rescaled step function disagrees");
            }
            if (holds) {
              ++satisfying;
              rescaling_witness(x, y, bx, by, p, c);
              if (by == y) {
                if (bx != x) {
                  ok = false;
                  report.fail(name(x, y, bx, by, c) + ": Y = y but X != x");
                }
              } else if (by == rep(-y, p)) {
                if (bx != rep(-x + c - 1, p)) {
                  ok = false;
                  report.fail(name(x, y, bx, by, c) + ": Y = -y but X != -x + C - 1");
                }
              } else {
                ok = false;
                report.fail(name(x, y, bx, by, c) + ": condition holds with Y != +-y");
              }
            }
            if (ok) ++row.passed;
          }
        }
      }
    }
  }
  report.rows.push_back(row);
  report.note("satisfying_tuples p=" + std::to_string(p), std::to_string(satisfying));
  return report;
}

}  // namespace lensd
