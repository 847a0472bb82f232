#pragma once

// Exact scalars. Integer and Rational are GMP values; mpq_class keeps every
// result of arithmetic in canonical form (lowest terms, positive denominator).

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace invineq {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// base^e for any integer exponent; base must be nonzero when e < 0.
inline Rational rpow(const Rational& base, long e) {
  if (e >= 0) {
    return make_rational(ipow(base.get_num(), static_cast<unsigned long>(e)),
                         ipow(base.get_den(), static_cast<unsigned long>(e)));
  }
  if (base == 0) throw std::domain_error("zero to a negative power");
  const auto k = static_cast<unsigned long>(-e);
  return make_rational(ipow(base.get_den(), k), ipow(base.get_num(), k));
}

/// 2^e as a rational, e of either sign.
inline Rational pow2(long e) { return rpow(Rational(2), e); }

/// Rising factorial a(a+1)...(a+n-1); equals 1 for n = 0.
inline Rational pochhammer(const Rational& a, unsigned long n) {
  Rational r = 1;
  Rational f = a;
  for (unsigned long i = 0; i < n; ++i) {
    r *= f;
    if (r == 0) return r;
    f += 1;
  }
  return r;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

/// Canonical text form: "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p", "p/q", or a decimal literal such as "-0.25" or "1e-12".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };
  if (text.empty()) fail();
  auto digits_only = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  auto signed_digits = [&](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return digits_only(s);
  };
  auto to_integer = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!signed_digits(num) || !digits_only(den)) fail();
    Integer d = to_integer(den);
    if (d == 0) fail();
    return make_rational(to_integer(num), d);
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    auto exp_text = text.substr(e + 1);
    if (!signed_digits(exp_text) || exp_text.size() > 6) fail();
    exponent = std::stol(std::string(exp_text));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string int_part(mantissa);
  std::string frac_part;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    int_part = std::string(mantissa.substr(0, dot));
    frac_part = std::string(mantissa.substr(dot + 1));
  }
  if (int_part.empty() && frac_part.empty()) fail();
  if ((!int_part.empty() && !digits_only(int_part)) ||
      (!frac_part.empty() && !digits_only(frac_part)))
    fail();
  Integer all(int_part + frac_part == "" ? "0" : int_part + frac_part, 10);
  Rational value = make_rational(all, ipow(10, frac_part.size()));
  value *= rpow(Rational(10), exponent);
  return negative ? Rational(-value) : value;
}

}  // namespace invineq
