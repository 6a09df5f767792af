#include "qreg/fields.hpp"

namespace qreg {

namespace {

using u128 = unsigned __int128;

long long mulmod(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<u128>(a) * static_cast<u128>(b) % static_cast<u128>(m));
}

long long powmod(long long a, long long e, long long m) {
  long long r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

long long inv_mod(long long a, long long p) {
  long long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("element not invertible mod p");
  if (t < 0) t += p;
  return t;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long q : {2ll, 3ll, 5ll, 7ll, 11ll, 13ll, 17ll, 19ll, 23ll, 29ll, 31ll, 37ll}) {
    if (n % q == 0) return n == q;
  }
  long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (long long a : {2ll, 3ll, 5ll, 7ll, 11ll, 13ll, 17ll, 19ll, 23ll, 29ll, 31ll, 37ll}) {
    long long x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i + 1 < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(long long p) {
  if (p < 2 || p >= (1ll << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31");
  }
  return FieldSpec{p};
}

std::string FieldSpec::str() const {
  return is_rational() ? "Q" : "F" + std::to_string(p);
}

Fp fp_make(long long v, long long p) {
  v %= p;
  if (v < 0) v += p;
  return Fp{v, p};
}

namespace {
long long common_p(const Fp& a, const Fp& b) {
  if (a.p == 0) return b.p;
  if (b.p == 0) return a.p;
  if (a.p != b.p) throw std::logic_error("mixed characteristics in Fp arithmetic");
  return a.p;
}
}  // namespace

Fp operator+(const Fp& a, const Fp& b) {
  long long p = common_p(a, b);
  if (p == 0) return Fp{};
  long long v = a.v + b.v;
  if (v >= p) v -= p;
  return Fp{v, p};
}

Fp operator-(const Fp& a, const Fp& b) {
  long long p = common_p(a, b);
  if (p == 0) return Fp{};
  long long v = a.v - b.v;
  if (v < 0) v += p;
  return Fp{v, p};
}

Fp operator-(const Fp& a) {
  if (a.p == 0 || a.v == 0) return Fp{0, a.p};
  return Fp{a.p - a.v, a.p};
}

Fp operator*(const Fp& a, const Fp& b) {
  long long p = common_p(a, b);
  if (p == 0) return Fp{};
  return Fp{mulmod(a.v, b.v, p), p};
}

Fp operator/(const Fp& a, const Fp& b) {
  long long p = common_p(a, b);
  if (b.v == 0) throw std::domain_error("division by zero in F_p");
  return Fp{mulmod(a.v % p, inv_mod(b.v, p), p), p};
}

Fp& operator+=(Fp& a, const Fp& b) { return a = a + b; }
Fp& operator-=(Fp& a, const Fp& b) { return a = a - b; }
Fp& operator*=(Fp& a, const Fp& b) { return a = a * b; }
Fp& operator/=(Fp& a, const Fp& b) { return a = a / b; }

bool operator==(const Fp& a, const Fp& b) {
  if (a.v == 0 && b.v == 0) return true;
  return a.p == b.p && a.v == b.v;
}

bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

Rational FieldCtx<Rational>::parse(const std::string& s) const {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

Fp FieldCtx<Fp>::from_long(long long n) const { return fp_make(n, p); }

Fp FieldCtx<Fp>::from_mpq(const mpq_class& q) const {
  unsigned long den = mpz_fdiv_ui(q.get_den().get_mpz_t(), static_cast<unsigned long>(p));
  if (den == 0) throw std::domain_error("coefficient denominator vanishes mod p");
  unsigned long num = mpz_fdiv_ui(q.get_num().get_mpz_t(), static_cast<unsigned long>(p));
  Fp n = fp_make(static_cast<long long>(num), p);
  Fp d = fp_make(static_cast<long long>(den), p);
  return n / d;
}

Fp FieldCtx<Fp>::parse(const std::string& s) const {
  FieldCtx<Rational> qc;
  return from_mpq(qc.parse(s));
}

FieldCtx<Rational> make_rational_ctx() { return FieldCtx<Rational>{}; }

FieldCtx<Fp> make_fp_ctx(long long p) {
  FieldSpec::prime(p);
  return FieldCtx<Fp>{p};
}

}  // namespace qreg
