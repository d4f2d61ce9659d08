#pragma once

#include <cstdint>

namespace lensd {

// A class in Z/pZ stored by its representative in [0, p).
struct Residue {
  std::int64_t value = 0;
  std::int64_t modulus = 1;

  friend bool operator==(const Residue&, const Residue&) = default;
};

// [a]_p. Throws InvalidArgument for p < 1.
Residue mod_rep(std::int64_t a, std::int64_t p);

// Shorthand for mod_rep(a, p).value; callers inside hot loops use this.
inline std::int64_t rep(std::int64_t a, std::int64_t p) {
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

// [a * b]_p without intermediate overflow.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p);

// a' with a * a' = 1 mod p (extended Euclid). Throws NotCoprime.
Residue mod_inv(std::int64_t a, std::int64_t p);

std::int64_t gcd(std::int64_t a, std::int64_t b);
bool is_unit(std::int64_t a, std::int64_t p);
std::int64_t euler_phi(std::int64_t p);

// Trial division; adequate for the sweep ranges.
bool is_prime(std::int64_t n);

// Legendre symbol via Euler's criterion. Throws unless p is an odd prime.
int legendre(std::int64_t m, std::int64_t p);

// Same symbol by scanning every square mod p.
int legendre_by_scan(std::int64_t m, std::int64_t p);

enum class SumCase { NoWrap, Wrap };

// NoWrap when [X]_p < p - [Y]_p, so that [X+Y]_p = [X]_p + [Y]_p;
// Wrap otherwise, so that [X+Y]_p = [X]_p + [Y]_p - p.
SumCase bracket_sum_case(std::int64_t x, std::int64_t y, std::int64_t p);

// Representative of a in (-p/2, p/2]; ties at p/2 take +p/2.
std::int64_t centered_rep(std::int64_t a, std::int64_t p);

}  // namespace lensd
