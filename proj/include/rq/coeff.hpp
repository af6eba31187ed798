#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace rq {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Tagged exact coefficient: a rational (char 0) or a residue in F_p,
/// p prime < 2^31. Mixing characteristics is a usage error.
class Coeff {
 public:
  Coeff() = default;  // rational zero

  static Coeff rational(BigRat q) {
    Coeff c;
    c.q_ = std::move(q);
    return c;
  }
  static Coeff rational(long long n) { return rational(BigRat(n)); }

  static Coeff mod(long long p, long long v) {
    Coeff c;
    c.p_ = p;
    c.r_ = v % p;
    if (c.r_ < 0) c.r_ += p;
    return c;
  }

  static Coeff zero_like(const Coeff& other) {
    return other.p_ ? mod(other.p_, 0) : rational(0);
  }
  static Coeff one_like(const Coeff& other) {
    return other.p_ ? mod(other.p_, 1) : rational(1);
  }

  long long char_p() const { return p_; }
  bool is_zero() const { return p_ ? r_ == 0 : q_.is_zero(); }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
  long long residue() const { return r_; }
  const BigRat& rat() const { return q_; }

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator/(const Coeff& o) const;
  Coeff operator-() const;
  Coeff inverse() const;
  bool operator==(const Coeff& o) const {
    return p_ == o.p_ && (p_ ? r_ == o.r_ : q_ == o.q_);
  }
  bool operator!=(const Coeff& o) const { return !(*this == o); }

  /// True for rationals with negative sign; F_p residues are never negative.
  bool is_negative() const { return p_ == 0 && q_ < 0; }
  Coeff abs() const { return is_negative() ? -*this : *this; }

  /// Exact square root in the coefficient field, if one exists.
  std::optional<Coeff> sqrt() const;

  std::string str() const;

 private:
  void check_same(const Coeff& o) const {
    if (p_ != o.p_) throw std::logic_error("Coeff: mixed coefficient fields");
  }
  long long p_ = 0;  // 0 = rational
  long long r_ = 0;
  BigRat q_;
};

/// a^e mod p for p < 2^31.
long long powmod(long long a, long long e, long long p);

/// Square root in F_p (Tonelli-Shanks; p prime < 2^31), if r is a QR.
std::optional<long long> sqrt_mod(long long r, long long p);

}  // namespace rq
