#pragma once

#include "lensd/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lensd {

// Upper bounds on p for each verification suite.
struct SweepCaps {
  std::int64_t shift = 200;      // shift formula and the two-route table comparison
  std::int64_t spin = 200;       // spin structures and conjugation symmetry
  std::int64_t lemma3 = 200;     // relative invariant identities
  std::int64_t theorem1 = 50;    // torsor isomorphism search
  std::int64_t keyeq = 200;      // four-bracket identity vs threshold equivalence
  std::int64_t theorem2 = 500;   // image of f mod p for odd primes
  std::int64_t lemma4 = 100;
  std::int64_t lemma5 = 40;

  static SweepCaps full() { return SweepCaps{}; }
  static SweepCaps quick();
  // Throws InvalidArgument for names other than "quick" and "full".
  static SweepCaps profile(const std::string& name);

  // Every cap set to the same value.
  SweepCaps with_all(std::int64_t p_max) const;
};

SweepReport verify_shift(std::int64_t p_max);
SweepReport verify_spin(std::int64_t p_max);
SweepReport verify_relative_identities(std::int64_t p_max);
SweepReport verify_key_equivalence(std::int64_t p_max);
SweepReport verify_step_functions(std::int64_t p_max);
SweepReport verify_affine_pairs(std::int64_t p_max);

// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one named suite, or every suite for "all". Throws InvalidArgument for
// unknown names.
SweepReport run_suite(const std::string& name, const SweepCaps& caps);

}  // namespace lensd
