#include "ordersum/numeric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ordersum {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n, std::uint64_t limit) {
  if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
  if (n > limit) {
    throw ResourceLimitError("factorize: " + std::to_string(n) + " exceeds configured bound " +
                             std::to_string(limit));
  }
  Factorization out;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

BigInt pow_big(const BigInt& base, int exp) {
  BigInt r = 1;
  BigInt b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
  return {num_ * o.den_, den_ * o.num_};
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

std::string Rational::decimal6() const {
  bool neg = num_ < 0;
  BigInt scaled = (neg ? -num_ : num_) * 1000000;
  BigInt q = scaled / den_;
  BigInt r = scaled % den_;
  BigInt twice = r * 2;
  if (twice > den_ || (twice == den_ && (q & 1) == 1)) ++q;
  BigInt ip = q / 1000000;
  BigInt fp = q % 1000000;
  std::string frac = fp.str();
  frac.insert(0, 6 - frac.size(), '0');
  return (neg ? "-" : "") + ip.str() + "." + frac;
}

}  // namespace ordersum
