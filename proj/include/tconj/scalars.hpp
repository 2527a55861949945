#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tconj {

// Base class for all errors raised by the library. Callers that need to
// distinguish failure modes catch the derived types below.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument to a constructor or operation (bad modulus, mismatched
// fields, division by zero, malformed descriptor, ...).
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// Element of GF(p), p prime. Residues are kept in [0, p). Elements carry
// their modulus so mixed-field arithmetic can be rejected.
struct Fp {
  std::int64_t v = 0;
  std::int64_t p = 0;

  friend bool operator==(const Fp&, const Fp&) = default;
};

// The prime field GF(p). Construction rejects non-primes.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t p);

  std::int64_t modulus() const { return p_; }

  // Reduces an arbitrary integer (possibly negative) into the field.
  Fp make(std::int64_t value) const;
  Fp zero() const { return Fp{0, p_}; }
  Fp one() const { return make(1); }

 private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n);

// Reduce an arbitrary integer into [0, p).
std::int64_t mod_reduce(std::int64_t value, std::int64_t p);

Fp operator+(const Fp& a, const Fp& b);
Fp operator-(const Fp& a, const Fp& b);
Fp operator*(const Fp& a, const Fp& b);
Fp operator-(const Fp& a);

// Multiplicative inverse; throws InvalidArgument on zero.
Fp inv(const Fp& a);

// a^n with n any integer; negative n inverts first (throws on zero base).
// pow(0, 0) is defined as 1.
Fp pow(const Fp& a, std::int64_t n);

// True iff a = s^2 for some s in GF(p) (0 counts as a square).
bool is_square(const Fp& a);

}  // namespace tconj
