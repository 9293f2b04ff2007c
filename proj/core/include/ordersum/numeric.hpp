#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordersum {

// Arbitrary-precision integer. Every order, psi value and bound in the
// toolkit is exact; nothing here ever goes through floating point.
using BigInt = boost::multiprecision::cpp_int;

// A computation hit a configured cap (table size, lattice size, search
// budget, ...). The message names the partial progress where useful.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mechanically checked statement failed on a concrete instance. Thrown
// with a counterexample description; seeing one of these means a verified
// claim is false for the group at hand.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  std::uint64_t prime = 0;
  int exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Ascending prime-power decomposition; factorize(1) == {}.
using Factorization = std::vector<PrimePower>;

bool is_prime(std::uint64_t n);

// Trial division. Total for n >= 1; throws ResourceLimitError above `limit`.
Factorization factorize(std::uint64_t n, std::uint64_t limit = 1'000'000'000'000ULL);

BigInt pow_big(const BigInt& base, int exp);

// Reduced fraction with positive denominator. Equality is structural and
// ordering is exact via cross-multiplication.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  Rational operator+(const Rational& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
  Rational operator-(const Rational& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
  Rational operator*(const Rational& o) const { return {num_ * o.num_, den_ * o.den_}; }
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  // "19/43", or just "19" when the denominator is 1.
  std::string str() const;

  // Fixed six fractional digits, round half to even. Display only; all
  // comparisons in the library go through the exact representation.
  std::string decimal6() const;

 private:
  BigInt num_;
  BigInt den_;  // > 0
};

inline Rational rational(BigInt num, BigInt den) { return {std::move(num), std::move(den)}; }

}  // namespace ordersum
