#include "rq/coeff.hpp"

namespace rq {

Coeff Coeff::operator+(const Coeff& o) const {
  check_same(o);
  return p_ ? mod(p_, (r_ + o.r_) % p_) : rational(q_ + o.q_);
}

Coeff Coeff::operator-(const Coeff& o) const {
  check_same(o);
  return p_ ? mod(p_, r_ - o.r_) : rational(q_ - o.q_);
}

Coeff Coeff::operator*(const Coeff& o) const {
  check_same(o);
  if (p_) return mod(p_, static_cast<long long>((__int128)r_ * o.r_ % p_));
  return rational(q_ * o.q_);
}

Coeff Coeff::operator/(const Coeff& o) const { return *this * o.inverse(); }

Coeff Coeff::operator-() const {
  return p_ ? mod(p_, p_ - r_) : rational(-q_);
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw std::domain_error("Coeff: division by zero");
  if (p_ == 0) return rational(1 / q_);
  return mod(p_, powmod(r_, p_ - 2, p_));
}

long long powmod(long long a, long long e, long long p) {
  long long r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = static_cast<long long>((__int128)r * a % p);
    a = static_cast<long long>((__int128)a * a % p);
    e >>= 1;
  }
  return r;
}

std::optional<long long> sqrt_mod(long long r, long long p) {
  r %= p;
  if (r < 0) r += p;
  if (r == 0) return 0;
  if (p == 2) return r;
  if (powmod(r, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(r, (p + 1) / 4, p);
  // Tonelli-Shanks
  long long q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  long long z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  long long m = s;
  long long c = powmod(z, q, p);
  long long t = powmod(r, q, p);
  long long x = powmod(r, (q + 1) / 2, p);
  while (t != 1) {
    long long i = 0, tt = t;
    while (tt != 1) {
      tt = static_cast<long long>((__int128)tt * tt % p);
      ++i;
    }
    long long b = c;
    for (long long j = 0; j < m - i - 1; ++j)
      b = static_cast<long long>((__int128)b * b % p);
    m = i;
    c = static_cast<long long>((__int128)b * b % p);
    t = static_cast<long long>((__int128)t * c % p);
    x = static_cast<long long>((__int128)x * b % p);
  }
  return x;
}

namespace {
std::optional<BigInt> int_sqrt_exact(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt s = boost::multiprecision::sqrt(n);
  if (s * s == n) return s;
  return std::nullopt;
}
}  // namespace

std::optional<Coeff> Coeff::sqrt() const {
  if (p_) {
    auto s = sqrt_mod(r_, p_);
    if (!s) return std::nullopt;
    return mod(p_, *s);
  }
  auto num = int_sqrt_exact(boost::multiprecision::numerator(q_));
  auto den = int_sqrt_exact(boost::multiprecision::denominator(q_));
  if (!num || !den) return std::nullopt;
  return rational(BigRat(*num, *den));
}

std::string Coeff::str() const {
  if (p_) return std::to_string(r_);
  return q_.str();
}

}  // namespace rq
