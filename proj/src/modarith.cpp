#include "lensd/modarith.hpp"

#include "lensd/errors.hpp"

#include <string>

namespace lensd {

namespace {

void require_modulus(std::int64_t p) {
  if (p < 1) throw InvalidArgument("modulus must be positive, got " + std::to_string(p));
}

}  // namespace

Residue mod_rep(std::int64_t a, std::int64_t p) {
  require_modulus(p);
  return Residue{rep(a, p), p};
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  require_modulus(p);
  auto prod = static_cast<__int128>(rep(a, p)) * rep(b, p);
  return static_cast<std::int64_t>(prod % p);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_unit(std::int64_t a, std::int64_t p) { return gcd(a, p) == 1; }

Residue mod_inv(std::int64_t a, std::int64_t p) {
  require_modulus(p);
  std::int64_t old_r = rep(a, p), r = p;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  // old_r = gcd(a, p); with p = 1 every integer is a unit and the inverse is 0.
  if (old_r != 1 && p != 1) {
    throw NotCoprime(std::to_string(a) + " is not invertible modulo " + std::to_string(p));
  }
  return Residue{rep(old_s, p), p};
}

std::int64_t euler_phi(std::int64_t p) {
  require_modulus(p);
  std::int64_t result = p;
  std::int64_t n = p;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    while (n % f == 0) n /= f;
    result -= result / f;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

namespace {

void require_odd_prime(std::int64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw InvalidArgument("Legendre symbol needs an odd prime modulus, got " + std::to_string(p));
  }
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t result = 1 % p;
  base = rep(base, p);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

}  // namespace

int legendre(std::int64_t m, std::int64_t p) {
  require_odd_prime(p);
  std::int64_t e = pow_mod(m, (p - 1) / 2, p);
  if (e == 0) return 0;
  return e == 1 ? 1 : -1;
}

int legendre_by_scan(std::int64_t m, std::int64_t p) {
  require_odd_prime(p);
  std::int64_t target = rep(m, p);
  if (target == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (mul_mod(x, x, p) == target) return 1;
  }
  return -1;
}

SumCase bracket_sum_case(std::int64_t x, std::int64_t y, std::int64_t p) {
  require_modulus(p);
  return rep(x, p) < p - rep(y, p) ? SumCase::NoWrap : SumCase::Wrap;
}

std::int64_t centered_rep(std::int64_t a, std::int64_t p) {
  require_modulus(p);
  std::int64_t r = rep(a, p);
  // r in [0, p); shift the upper half down so the result lies in (-p/2, p/2].
  if (2 * r > p) r -= p;
  return r;
}

}  // namespace lensd
