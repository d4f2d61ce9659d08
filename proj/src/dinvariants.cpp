#include "lensd/dinvariants.hpp"

#include "lensd/errors.hpp"
#include "lensd/modarith.hpp"

#include <algorithm>
#include <string>

namespace lensd {

LensSpace::LensSpace(std::int64_t p, std::int64_t q) : p_(p), q_(q) {
  if (p < 1) throw InvalidArgument("p must be positive, got " + std::to_string(p));
  if (p == 1) {
    if (q != 0) throw InvalidArgument("the only lens space with p = 1 is L(1,0)");
    return;
  }
  if (gcd(p, q) != 1) throw NotCoprime("p and q must be coprime");
  if (q <= 0 || q >= p) throw InvalidArgument("q must satisfy 0 < q < p");
}

LensSpace LensSpace::euclid_step() const {
  if (p_ == 1) throw InvalidArgument("L(1,0) has no Euclidean successor");
  if (q_ == 1) return sphere();
  return LensSpace(q_, p_ % q_);
}

std::string LensSpace::name() const {
  return "L(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
}

bool SpinSet::contains(std::int64_t label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

SpinSet spin_structures(const LensSpace& space) {
  const std::int64_t p = space.p();
  const std::int64_t q = space.q();
  SpinSet out;
  for (std::int64_t twice : {q - 1, p + q - 1}) {
    if (twice % 2 != 0) continue;
    std::int64_t label = rep(twice / 2, p);
    if (!out.contains(label)) out.labels.push_back(label);
  }
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

namespace {

// 1/4 - (2i + 1 - p - q)^2 / (4pq), for i already reduced mod p.
Rational recursion_term(std::int64_t p, std::int64_t q, std::int64_t i) {
  BigInt a = 2 * i + 1 - p - q;
  BigInt pq = BigInt(p) * q;
  return Rational(pq - a * a, 4 * pq);
}

}  // namespace

Rational d_invariant(const LensSpace& space, std::int64_t label) {
  Rational total;
  bool negate = false;
  std::int64_t p = space.p();
  std::int64_t q = space.q();
  std::int64_t i = rep(label, p);
  // Unrolled recursion: d_k = term_k - d_{k+1}, so signs alternate.
  while (p != 1) {
    Rational term = recursion_term(p, q, i);
    if (negate) total -= term; else total += term;
    negate = !negate;
    std::int64_t next_p = q;
    std::int64_t next_q = p % q;
    if (next_p == 1) next_q = 0;
    p = next_p;
    q = next_q;
    i = rep(i, p);
  }
  return total;
}

DInvTable::DInvTable(LensSpace space, std::vector<Rational> values, bool reversed)
    : space_(space), values_(std::move(values)), reversed_(reversed) {
  if (static_cast<std::int64_t>(values_.size()) != space_.p()) {
    throw InvalidArgument("a d-table for " + space_.name() + " needs exactly p values");
  }
}

const Rational& DInvTable::operator[](std::int64_t label) const {
  return values_[static_cast<std::size_t>(rep(label, space_.p()))];
}

namespace {

std::vector<Rational> build_values(const LensSpace& space) {
  const std::int64_t p = space.p();
  if (p == 1) return {Rational(0)};
  const std::int64_t q = space.q();
  std::vector<Rational> sub = build_values(space.euclid_step());
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(p));
  for (std::int64_t i = 0; i < p; ++i) {
    out.push_back(recursion_term(p, q, i) - sub[static_cast<std::size_t>(i % q)]);
  }
  return out;
}

}  // namespace

DInvTable d_table(const LensSpace& space) {
  DInvTable table(space, build_values(space));
  if (auto bad = shift_relation_violation(table)) {
    throw InternalInconsistency("shift relation fails for " + space.name() + " at label " +
                                std::to_string(*bad));
  }
  for (std::int64_t s : spin_structures(space).labels) {
    if (auto bad = conjugation_violation(table, s)) {
      throw InternalInconsistency("conjugation symmetry fails for " + space.name() +
                                  " about spin label " + std::to_string(s) + " at offset " +
                                  std::to_string(*bad));
    }
  }
  return table;
}

Rational shift_increment(const LensSpace& space, std::int64_t label) {
  const std::int64_t p = space.p();
  return Rational(BigInt(p - 1 - 2 * rep(label, p)), BigInt(p));
}

DInvTable d_table_by_shift(const LensSpace& space, std::int64_t anchor) {
  const std::int64_t p = space.p();
  std::vector<Rational> values(static_cast<std::size_t>(p));
  std::int64_t i = rep(anchor, p);
  Rational current = d_invariant(space, i);
  // q is a unit, so the orbit of the anchor under i -> i + q visits every label.
  for (std::int64_t step = 0; step < p; ++step) {
    values[static_cast<std::size_t>(i)] = current;
    current += shift_increment(space, i);
    i = rep(i + space.q(), p);
  }
  return DInvTable(space, std::move(values));
}

std::optional<std::int64_t> shift_relation_violation(const DInvTable& table) {
  const LensSpace& space = table.space();
  for (std::int64_t i = 0; i < space.p(); ++i) {
    Rational expected = shift_increment(space, i);
    if (table.reversed()) expected = -expected;
    if (table[i + space.q()] - table[i] != expected) return i;
  }
  return std::nullopt;
}

std::optional<std::int64_t> conjugation_violation(const DInvTable& table, std::int64_t spin) {
  for (std::int64_t n = 0; n < table.size(); ++n) {
    if (table[spin + n] != table[spin - n]) return n;
  }
  return std::nullopt;
}

std::int64_t conjugate_label(const LensSpace& space, std::int64_t spin, std::int64_t label) {
  if (!spin_structures(space).contains(rep(spin, space.p()))) {
    throw InvalidArgument(std::to_string(spin) + " is not a spin structure of " + space.name());
  }
  return rep(2 * spin - label, space.p());
}

DInvTable reverse_orientation_table(const DInvTable& table) {
  std::vector<Rational> values;
  values.reserve(table.values().size());
  for (const Rational& v : table.values()) values.push_back(-v);
  return DInvTable(table.space(), std::move(values), !table.reversed());
}

}  // namespace lensd
