#pragma once

// Binary fixed-point reals: value = mantissa / 2^bits. Used only for reporting
// and for diagnostics against transcendental targets; certificates are always
// made on exact rationals.

#include "invineq/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace invineq {

class FixedReal {
 public:
  static constexpr unsigned default_bits = 128;

  FixedReal() = default;

  /// floor(q * 2^bits) / 2^bits
  static FixedReal from_rational(const Rational& q, unsigned bits = default_bits) {
    return FixedReal(floor_scaled(q, bits), bits);
  }

  /// floor(sqrt(q) * 2^bits) / 2^bits, q >= 0.
  static FixedReal sqrt(const Rational& q, unsigned bits = default_bits) {
    if (q < 0) throw std::domain_error("sqrt of a negative rational");
    Integer m;
    Integer radicand = floor_scaled(q, 2 * bits);
    mpz_sqrt(m.get_mpz_t(), radicand.get_mpz_t());
    return FixedReal(m, bits);
  }

  /// Real cube root, rounded toward zero at the last bit.
  static FixedReal cbrt(const Rational& q, unsigned bits = default_bits) {
    Integer radicand = floor_scaled(abs(q), 3 * bits);
    Integer m;
    mpz_root(m.get_mpz_t(), radicand.get_mpz_t(), 3);
    if (q < 0) m = -m;
    return FixedReal(m, bits);
  }

  /// pi, accurate to within 2^-bits (Machin's formula with guard bits).
  static FixedReal pi(unsigned bits = default_bits) {
    const unsigned work = bits + 32;
    auto arctan_inv = [work](unsigned long x) {
      // sum_k (-1)^k / ((2k+1) x^(2k+1)), in units of 2^-work
      Integer one = Integer(1) << work;
      Integer power = one / x;
      Integer sum = power;
      const unsigned long x2 = x * x;
      for (unsigned long k = 1; power != 0; ++k) {
        power /= x2;
        Integer term = power / (2 * k + 1);
        if (k % 2) sum -= term; else sum += term;
      }
      return sum;
    };
    Integer value = 16 * arctan_inv(5) - 4 * arctan_inv(239);
    Integer m = value >> (work - bits);
    return FixedReal(m, bits);
  }

  unsigned bits() const { return bits_; }
  const Integer& mantissa() const { return m_; }

  Rational to_rational() const { return make_rational(m_, Integer(1) << bits_); }

  double to_double() const {
    // mpq -> double rounds correctly enough for display
    return to_rational().get_d();
  }

  /// Decimal expansion truncated to `digits` fractional digits.
  std::string to_decimal(unsigned digits = 20) const {
    Integer scaled = (abs(m_) * ipow(10, digits)) >> bits_;
    std::string s = scaled.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (digits == 0) s.pop_back();
    return (m_ < 0 ? "-" : "") + s;
  }

  friend FixedReal operator+(const FixedReal& a, const FixedReal& b) {
    check(a, b);
    return {a.m_ + b.m_, a.bits_};
  }
  friend FixedReal operator-(const FixedReal& a, const FixedReal& b) {
    check(a, b);
    return {a.m_ - b.m_, a.bits_};
  }
  friend FixedReal operator-(const FixedReal& a) { return {-a.m_, a.bits_}; }
  friend FixedReal operator*(const FixedReal& a, const FixedReal& b) {
    check(a, b);
    Integer p = a.m_ * b.m_;
    mpz_fdiv_q_2exp(p.get_mpz_t(), p.get_mpz_t(), a.bits_);
    return {p, a.bits_};
  }
  friend FixedReal operator/(const FixedReal& a, const FixedReal& b) {
    check(a, b);
    if (b.m_ == 0) throw std::domain_error("fixed-point division by zero");
    Integer q;
    Integer num = a.m_ << a.bits_;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.m_.get_mpz_t());
    return {q, a.bits_};
  }
  friend bool operator<(const FixedReal& a, const FixedReal& b) {
    check(a, b);
    return a.m_ < b.m_;
  }
  friend bool operator==(const FixedReal& a, const FixedReal& b) {
    return a.bits_ == b.bits_ && a.m_ == b.m_;
  }

 private:
  FixedReal(Integer m, unsigned bits) : m_(std::move(m)), bits_(bits) {}

  static Integer floor_scaled(const Rational& q, unsigned bits) {
    Integer num = q.get_num() << bits;
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return r;
  }
  static void check(const FixedReal& a, const FixedReal& b) {
    if (a.bits_ != b.bits_) throw std::invalid_argument("fixed-point precision mismatch");
  }

  Integer m_ = 0;
  unsigned bits_ = default_bits;
};

}  // namespace invineq
