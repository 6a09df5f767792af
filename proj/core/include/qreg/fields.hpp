#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qreg {

using Rational = mpq_class;

bool is_prime(long long n);

// p == 0 means the rationals, otherwise F_p with p an odd-or-2 prime < 2^31.
struct FieldSpec {
  long long p = 0;

  static FieldSpec rationals() { return FieldSpec{0}; }
  static FieldSpec prime(long long p);
  bool is_rational() const { return p == 0; }
  std::string str() const;
  bool operator==(const FieldSpec&) const = default;
};

// residue mod p. the default-constructed value is the canonical zero with p
// not yet attached; binary ops propagate p from the other operand.
struct Fp {
  long long v = 0;
  long long p = 0;

  bool is_zero() const { return v == 0; }
};

Fp fp_make(long long v, long long p);
Fp operator+(const Fp& a, const Fp& b);
Fp operator-(const Fp& a, const Fp& b);
Fp operator-(const Fp& a);
Fp operator*(const Fp& a, const Fp& b);
Fp operator/(const Fp& a, const Fp& b);
Fp& operator+=(Fp& a, const Fp& b);
Fp& operator-=(Fp& a, const Fp& b);
Fp& operator*=(Fp& a, const Fp& b);
Fp& operator/=(Fp& a, const Fp& b);
bool operator==(const Fp& a, const Fp& b);
bool operator!=(const Fp& a, const Fp& b);

template <class K>
struct FieldCtx;

template <>
struct FieldCtx<Rational> {
  FieldSpec spec() const { return FieldSpec::rationals(); }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_long(long long n) const { return Rational(static_cast<long>(n)); }
  Rational from_mpq(const mpq_class& q) const { return q; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::string str(const Rational& x) { return x.get_str(); }
  Rational parse(const std::string& s) const;
};

template <>
struct FieldCtx<Fp> {
  long long p = 0;

  FieldSpec spec() const { return FieldSpec::prime(p); }
  Fp zero() const { return Fp{0, p}; }
  Fp one() const { return Fp{p > 1 ? 1 : 0, p}; }
  Fp from_long(long long n) const;
  // throws std::domain_error when the denominator vanishes mod p
  Fp from_mpq(const mpq_class& q) const;
  static bool is_zero(const Fp& x) { return x.v == 0; }
  static std::string str(const Fp& x) { return std::to_string(x.v); }
  Fp parse(const std::string& s) const;
};

FieldCtx<Rational> make_rational_ctx();
FieldCtx<Fp> make_fp_ctx(long long p);

}  // namespace qreg
