#include "tconj/scalars.hpp"

namespace tconj {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t mod_reduce(std::int64_t value, std::int64_t p) {
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return r;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (!is_prime(p)) {
    throw InvalidArgument("PrimeField: modulus " + std::to_string(p) +
                          " is not prime");
  }
}

Fp PrimeField::make(std::int64_t value) const {
  return Fp{mod_reduce(value, p_), p_};
}

namespace {

void check_same_field(const Fp& a, const Fp& b) {
  if (a.p != b.p) {
    throw InvalidArgument("Fp: mixed moduli " + std::to_string(a.p) + " and " +
                          std::to_string(b.p));
  }
}

}  // namespace

Fp operator+(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  return Fp{mod_reduce(a.v + b.v, a.p), a.p};
}

Fp operator-(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  return Fp{mod_reduce(a.v - b.v, a.p), a.p};
}

Fp operator*(const Fp& a, const Fp& b) {
  check_same_field(a, b);
  return Fp{mod_reduce(a.v * b.v, a.p), a.p};
}

Fp operator-(const Fp& a) { return Fp{mod_reduce(-a.v, a.p), a.p}; }

Fp inv(const Fp& a) {
  if (a.v == 0) {
    throw InvalidArgument("Fp: inverse of zero in GF(" + std::to_string(a.p) +
                          ")");
  }
  // Extended Euclid on (v, p); p prime so gcd is 1.
  std::int64_t r0 = a.v, r1 = a.p, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  return Fp{mod_reduce(s0, a.p), a.p};
}

Fp pow(const Fp& a, std::int64_t n) {
  Fp base = a;
  if (n < 0) {
    base = inv(a);
    n = -n;
  }
  Fp acc{1 % base.p, base.p};
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool is_square(const Fp& a) {
  if (a.v == 0 || a.p == 2) return true;
  // Euler criterion.
  return pow(a, (a.p - 1) / 2).v == 1;
}

}  // namespace tconj
