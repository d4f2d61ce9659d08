#pragma once

#include "lensd/dinvariants.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace lensd {

// f(s, n) = p d(s + nq) - p d(s) for n in Z/pZ; integer valued.
class RelFnTable {
 public:
  RelFnTable(LensSpace space, std::int64_t spin, std::vector<std::int64_t> values);

  const LensSpace& space() const { return space_; }
  std::int64_t spin() const { return spin_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  // n is reduced mod p.
  std::int64_t operator[](std::int64_t n) const;

 private:
  LensSpace space_;
  std::int64_t spin_;
  std::vector<std::int64_t> values_;
};

// Builds f from the d-table. Throws InvalidArgument when `spin` is not a spin
// structure and InternalInconsistency if any entry is non-integral or any of
// f(0) = 0, the step rule, the congruence f(n) = -n^2 q (mod p) fails.
RelFnTable rel_f_table(const DInvTable& table, std::int64_t spin);
RelFnTable rel_f_table(const LensSpace& space, std::int64_t spin);

struct IdentityCheck {
  bool passed = true;
  std::optional<std::int64_t> first_failure;  // index n or m of the first failure
};

// f(s, n+1) = f(s, n) + p - 1 - 2[s + nq]_p for n = 0..p-1, wrapping at n = p.
IdentityCheck check_rel_recursion(const RelFnTable& table);

// f(s, n) = -n^2 q (mod p) for every n.
IdentityCheck check_rel_congruence(const RelFnTable& table);

// g(m) assembled once from f1(s1, m q1') and once from f2(s2, m u' q1').
struct GFunctionReport {
  std::vector<std::int64_t> from_first;
  std::vector<std::int64_t> from_second;
  bool agree = false;
  std::optional<std::int64_t> first_disagreement;
};

// Both spaces must share p; u must be a unit mod p.
GFunctionReport g_function(const LensSpace& first, std::int64_t spin1, const LensSpace& second,
                           std::int64_t spin2, std::int64_t unit);

// [s1+m] + [s2+(m+q)u] == [s2+mu] + [s1+m+uq], all mod p.
bool key_identity_holds(std::int64_t p, std::int64_t q, std::int64_t unit, std::int64_t spin1,
                        std::int64_t spin2, std::int64_t m);

// ([s1+m] < p - [uq]) <=> ([s2+mu] < p - [uq]), decided with bracket_sum_case.
bool threshold_equivalence_holds(std::int64_t p, std::int64_t q, std::int64_t unit,
                                 std::int64_t spin1, std::int64_t spin2, std::int64_t m);

}  // namespace lensd
