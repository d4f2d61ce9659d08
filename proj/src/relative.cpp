#include "lensd/relative.hpp"

#include "lensd/errors.hpp"
#include "lensd/modarith.hpp"

#include <string>

namespace lensd {

RelFnTable::RelFnTable(LensSpace space, std::int64_t spin, std::vector<std::int64_t> values)
    : space_(space), spin_(spin), values_(std::move(values)) {
  if (static_cast<std::int64_t>(values_.size()) != space_.p()) {
    throw InvalidArgument("relative table for " + space_.name() + " needs exactly p values");
  }
}

std::int64_t RelFnTable::operator[](std::int64_t n) const {
  return values_[static_cast<std::size_t>(rep(n, space_.p()))];
}

IdentityCheck check_rel_recursion(const RelFnTable& table) {
  const std::int64_t p = table.space().p();
  const std::int64_t q = table.space().q();
  const std::int64_t s = table.spin();
  for (std::int64_t n = 0; n < p; ++n) {
    if (table[n + 1] != table[n] + p - 1 - 2 * rep(s + n * q, p)) return {false, n};
  }
  return {};
}

IdentityCheck check_rel_congruence(const RelFnTable& table) {
  const std::int64_t p = table.space().p();
  const std::int64_t q = table.space().q();
  for (std::int64_t n = 0; n < p; ++n) {
    std::int64_t expected = rep(-mul_mod(mul_mod(n, n, p), q, p), p);
    if (rep(table[n], p) != expected) return {false, n};
  }
  return {};
}

RelFnTable rel_f_table(const DInvTable& table, std::int64_t spin) {
  const LensSpace& space = table.space();
  const std::int64_t p = space.p();
  if (table.reversed()) throw InvalidArgument("relative invariants need the standard orientation");
  if (!spin_structures(space).contains(spin)) {
    throw InvalidArgument(std::to_string(spin) + " is not a spin structure of " + space.name());
  }
  const Rational base = table[spin];
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(p));
  for (std::int64_t n = 0; n < p; ++n) {
    Rational scaled = Rational(p) * (table[spin + n * space.q()] - base);
    if (!scaled.is_integer()) {
      throw InternalInconsistency("f(" + std::to_string(spin) + ", " + std::to_string(n) +
                                  ") = " + scaled.str() + " is not an integer for " + space.name());
    }
    values.push_back(scaled.numerator().convert_to<std::int64_t>());
  }
  RelFnTable out(space, spin, std::move(values));
  if (out[0] != 0) throw InternalInconsistency("f(s, 0) != 0 for " + space.name());
  if (auto c = check_rel_recursion(out); !c.passed) {
    throw InternalInconsistency("step rule fails for " + space.name() + " at n = " +
                                std::to_string(*c.first_failure));
  }
  if (auto c = check_rel_congruence(out); !c.passed) {
    throw InternalInconsistency("congruence f = -n^2 q fails for " + space.name() + " at n = " +
                                std::to_string(*c.first_failure));
  }
  return out;
}

RelFnTable rel_f_table(const LensSpace& space, std::int64_t spin) {
  return rel_f_table(d_table(space), spin);
}

GFunctionReport g_function(const LensSpace& first, std::int64_t spin1, const LensSpace& second,
                           std::int64_t spin2, std::int64_t unit) {
  const std::int64_t p = first.p();
  if (second.p() != p) throw InvalidArgument("g-function needs two lens spaces with the same p");
  if (!is_unit(unit, p)) {
    throw NotCoprime(std::to_string(unit) + " is not a unit modulo " + std::to_string(p));
  }
  const RelFnTable f1 = rel_f_table(first, spin1);
  const RelFnTable f2 = rel_f_table(second, spin2);
  const std::int64_t q_inv = mod_inv(first.q(), p).value;
  const std::int64_t u_inv = mod_inv(unit, p).value;

  GFunctionReport report;
  report.from_first.reserve(static_cast<std::size_t>(p));
  report.from_second.reserve(static_cast<std::size_t>(p));
  for (std::int64_t m = 0; m < p; ++m) {
    report.from_first.push_back(f1[mul_mod(m, q_inv, p)]);
    report.from_second.push_back(f2[mul_mod(mul_mod(m, u_inv, p), q_inv, p)]);
    if (!report.first_disagreement && report.from_first.back() != report.from_second.back()) {
      report.first_disagreement = m;
    }
  }
  report.agree = !report.first_disagreement.has_value();
  return report;
}

bool key_identity_holds(std::int64_t p, std::int64_t q, std::int64_t unit, std::int64_t spin1,
                        std::int64_t spin2, std::int64_t m) {
  const std::int64_t uq = mul_mod(unit, q, p);
  const std::int64_t lhs = rep(spin1 + m, p) + rep(spin2 + mul_mod(m + q, unit, p), p);
  const std::int64_t rhs = rep(spin2 + mul_mod(m, unit, p), p) + rep(spin1 + m + uq, p);
  return lhs == rhs;
}

bool threshold_equivalence_holds(std::int64_t p, std::int64_t q, std::int64_t unit,
                                 std::int64_t spin1, std::int64_t spin2, std::int64_t m) {
  const std::int64_t uq = mul_mod(unit, q, p);
  return bracket_sum_case(spin1 + m, uq, p) ==
         bracket_sum_case(spin2 + mul_mod(m, unit, p), uq, p);
}

}  // namespace lensd
