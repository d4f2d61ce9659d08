#pragma once

#include "lensd/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lensd {

// L(p, q), oriented as -p/q surgery on the unknot. Either gcd(p, q) = 1 with
// 0 < q < p, or the three-sphere L(1, 0).
class LensSpace {
 public:
  LensSpace(std::int64_t p, std::int64_t q);

  static LensSpace sphere() { return LensSpace(1, 0); }

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  // The next space in the Euclidean chain, L(q, [p]_q). Requires p > 1.
  LensSpace euclid_step() const;

  std::string name() const;

  friend bool operator==(const LensSpace&, const LensSpace&) = default;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

// Spin structures of L(p, q): the integers among (q-1)/2 and (p+q-1)/2,
// reduced mod p. One label when p is odd, two when p is even.
struct SpinSet {
  std::vector<std::int64_t> labels;  // ascending

  bool contains(std::int64_t label) const;
  std::size_t size() const { return labels.size(); }
};

SpinSet spin_structures(const LensSpace& space);

// d(L(p,q), i) by the Euclidean recursion
//   d(L(p,q), i) = 1/4 - (2[i]_p + 1 - p - q)^2 / (4pq) - d(L(q, [p]_q), [i]_q)
// with d(L(1,0), 0) = 0. Any integer label is accepted.
Rational d_invariant(const LensSpace& space, std::int64_t label);

class DInvTable {
 public:
  DInvTable(LensSpace space, std::vector<Rational> values, bool reversed = false);

  const LensSpace& space() const { return space_; }
  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  const std::vector<Rational>& values() const { return values_; }

  // Label is reduced mod p before lookup.
  const Rational& operator[](std::int64_t label) const;

  // True when this table holds d(-L(p,q), .) rather than d(L(p,q), .).
  bool reversed() const { return reversed_; }

  friend bool operator==(const DInvTable&, const DInvTable&) = default;

 private:
  LensSpace space_;
  std::vector<Rational> values_;
  bool reversed_;
};

// All p values. The sub-table for L(q, [p]_q) is built once and reused, so the
// whole Euclidean chain is walked a single time. Before returning, the shift
// relation and conjugation symmetry are checked (InternalInconsistency).
DInvTable d_table(const LensSpace& space);

// Independent route: one recursive evaluation at `anchor`, every other value
// obtained by walking the gamma-orbit with
//   d(i + q) = d(i) + (p - 1 - 2[i]_p) / p.
DInvTable d_table_by_shift(const LensSpace& space, std::int64_t anchor = 0);

// The exact increment d(i + q) - d(i) predicted by the shift formula.
Rational shift_increment(const LensSpace& space, std::int64_t label);

// First label where the shift relation fails, if any. Reversed tables are
// checked against the negated increment.
std::optional<std::int64_t> shift_relation_violation(const DInvTable& table);

// First offset n where d(s + n) != d(s - n), if any.
std::optional<std::int64_t> conjugation_violation(const DInvTable& table, std::int64_t spin);

// [2s - i]_p. Throws InvalidArgument if s is not a spin structure.
std::int64_t conjugate_label(const LensSpace& space, std::int64_t spin, std::int64_t label);

DInvTable reverse_orientation_table(const DInvTable& table);

}  // namespace lensd
