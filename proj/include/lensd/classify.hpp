#pragma once

#include "lensd/dinvariants.hpp"
#include "lensd/report.hpp"

#include <cstdint>
#include <vector>

namespace lensd {

// Affine bijection i -> [offset + unit * i]_p of Z/pZ.
struct TorsorIso {
  std::int64_t modulus = 1;
  std::int64_t offset = 0;
  std::int64_t unit = 1;

  std::int64_t apply(std::int64_t label) const;
  // (this o first)(i) = this(first(i)).
  TorsorIso after(const TorsorIso& first) const;

  static TorsorIso identity(std::int64_t p) { return TorsorIso{p, 0, 1 % p}; }

  friend bool operator==(const TorsorIso&, const TorsorIso&) = default;
};

// Oriented homeomorphism: q1 = q2 or q1 q2 = 1 (mod p).
bool homeomorphic(std::int64_t p, std::int64_t q1, std::int64_t q2);

// All (c, u) with d2([c + u i]_p) = d1(i) for every i, in order of ascending
// u then c. With require_spin_compat, the map must also carry the spin
// structures of the first space onto those of the second.
std::vector<TorsorIso> torsor_iso_search(std::int64_t p, std::int64_t q1, std::int64_t q2,
                                         bool require_spin_compat);
std::vector<TorsorIso> torsor_iso_search(const DInvTable& first, const DInvTable& second,
                                         bool require_spin_compat);

bool maps_spin_to_spin(const TorsorIso& iso, const SpinSet& from, const SpinSet& to);

struct ClassificationVerdict {
  std::int64_t p = 1;
  std::int64_t q1 = 0;
  std::int64_t q2 = 0;
  bool homeomorphic = false;
  // A spin-compatible d-preserving isomorphism exists.
  bool d_iso_exists = false;
  std::vector<TorsorIso> witnesses;                  // every d-preserving map
  std::vector<TorsorIso> spin_compatible_witnesses;  // subset of the above

  // The two notions agree, as they must for lens spaces.
  bool consistent() const { return homeomorphic == d_iso_exists; }
};

ClassificationVerdict classify(std::int64_t p, std::int64_t q1, std::int64_t q2);

// q2 = u^2 q1 (mod p) for the witness's unit.
bool unit_constraint_check(std::int64_t p, std::int64_t q1, std::int64_t q2, const TorsorIso& iso);

// u = +-1 or u q1 = +-1 (mod p).
bool unit_has_homeomorphism_form(std::int64_t p, std::int64_t q1, const TorsorIso& iso);

// For every 2 <= p <= p_max and every pair of units (q1, q2): a spin-compatible
// witness exists iff homeomorphic. Also verifies the unit constraint, the
// homeomorphism form of every witness, the key identity along every witness,
// and records whether dropping spin compatibility ever changes a verdict.
SweepReport verify_classification(std::int64_t p_max);

}  // namespace lensd
