#pragma once

#include "lensd/report.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace lensd {

// Image of f(s, .) mod p, with the number of n hitting each member.
struct SbarSet {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::int64_t spin = 0;  // spin structure the f-table was built from
  bool prime = false;
  std::map<std::int64_t, std::int64_t> multiplicity;

  std::vector<std::int64_t> members() const;  // ascending
};

// Reduces the genuine f-table mod p and cross-checks it, multiplicities
// included, against n -> [-n^2 q]_p. Composite p is allowed.
SbarSet sbar(std::int64_t p, std::int64_t q);

// { a : a = 0 or legendre(-a, p) = legendre(q, p) }, ascending. Throws
// InvalidArgument unless p is an odd prime.
std::vector<std::int64_t> residue_characterization(std::int64_t p, std::int64_t q);

// Every odd prime p <= p_max and every q: members match the characterization,
// there are (p+1)/2 of them, 0 is hit once and every other member twice.
// Also checks the residue/non-residue dichotomy and the L(2,1) exception.
SweepReport verify_residue_image(std::int64_t p_max);

}  // namespace lensd
