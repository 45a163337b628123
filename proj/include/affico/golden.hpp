#pragma once

// Exact arithmetic in the golden field Q(tau), tau = (1 + sqrt 5) / 2.

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace affico {

using Rational = mpq_class;

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(int s) {
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

inline std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) + 0x51ed27;
  const std::size_t n = mpz_size(p);
  for (std::size_t i = 0; i < n; ++i)
    h = hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(p, i)));
  return h;
}

inline std::size_t hash_rational(const Rational& q) {
  return hash_combine(hash_mpz(q.get_num()), hash_mpz(q.get_den()));
}

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("division by zero");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// a + b*tau with rational coefficients. gmpxx keeps both coefficients
/// reduced, so the (a, b) pair is a canonical representation.
class GoldenNumber {
 public:
  GoldenNumber() = default;
  GoldenNumber(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  GoldenNumber(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static GoldenNumber tau() { return {0, 1}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  GoldenNumber& operator+=(const GoldenNumber& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  GoldenNumber& operator-=(const GoldenNumber& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  // (a + b tau)(c + d tau) = (ac + bd) + (ad + bc + bd) tau
  GoldenNumber& operator*=(const GoldenNumber& o) {
    if (o.is_rational()) {
      a_ *= o.a_;
      b_ *= o.a_;
      return *this;
    }
    Rational bd = b_ * o.b_;
    Rational na = a_ * o.a_ + bd;
    Rational nb = a_ * o.b_ + b_ * o.a_ + bd;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  GoldenNumber& operator/=(const GoldenNumber& o) { return *this *= o.inverse(); }

  friend GoldenNumber operator+(GoldenNumber x, const GoldenNumber& y) { return x += y; }
  friend GoldenNumber operator-(GoldenNumber x, const GoldenNumber& y) { return x -= y; }
  friend GoldenNumber operator*(GoldenNumber x, const GoldenNumber& y) { return x *= y; }
  friend GoldenNumber operator/(GoldenNumber x, const GoldenNumber& y) { return x /= y; }
  GoldenNumber operator-() const { return {-a_, -b_}; }

  /// Galois conjugate tau -> 1 - tau.
  GoldenNumber conj() const { return {a_ + b_, -b_}; }

  /// Field norm x * conj(x) = a^2 + ab - b^2.
  Rational norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }

  GoldenNumber inverse() const {
    Rational n = norm();
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    GoldenNumber c = conj();
    return {c.a_ / n, c.b_ / n};
  }

  GoldenNumber pow(long e) const {
    GoldenNumber base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    GoldenNumber r(1);
    while (n) {
      if (n & 1U) r *= base;
      n >>= 1U;
      if (n) base *= base;
    }
    return r;
  }

  // value = (s + b sqrt5) / 2 with s = 2a + b; integer-only case analysis.
  Sign sign() const {
    Rational s = 2 * a_ + b_;
    const int ss = sgn(s);
    const int sb = sgn(b_);
    if (ss == 0 || sb == 0 || ss == sb) return sign_of(ss != 0 ? ss : sb);
    const int c = cmp(s * s, 5 * b_ * b_);
    if (c == 0) return Sign::zero;  // unreachable for rational s, b != 0
    return sign_of(c > 0 ? ss : sb);
  }

  double to_double() const {
    static const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    return a_.get_d() + b_.get_d() * t;
  }

  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Exact order on values.
  friend std::strong_ordering operator<=>(const GoldenNumber& x, const GoldenNumber& y) {
    switch ((x - y).sign()) {
      case Sign::negative: return std::strong_ordering::less;
      case Sign::positive: return std::strong_ordering::greater;
      default: return std::strong_ordering::equal;
    }
  }

  std::size_t hash() const { return hash_combine(hash_rational(a_), hash_rational(b_)); }

 private:
  Rational a_{0};
  Rational b_{0};
};

inline Sign sign(const GoldenNumber& x) { return x.sign(); }
inline GoldenNumber conj(const GoldenNumber& x) { return x.conj(); }
inline double to_double(const GoldenNumber& x) { return x.to_double(); }

/// Formats in the field-literal grammar, e.g. "7/5+1/5*tau", "-tau", "0".
inline std::string format(const GoldenNumber& x) {
  const Rational& a = x.a();
  const Rational& b = x.b();
  std::string out;
  if (sgn(a) != 0 || sgn(b) == 0) out = a.get_str();
  if (sgn(b) != 0) {
    if (sgn(b) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    Rational mag = abs(b);
    if (mag != 1) out += mag.get_str() + "*";
    out += "tau";
  }
  return out;
}

}  // namespace affico

template <>
struct std::hash<affico::GoldenNumber> {
  std::size_t operator()(const affico::GoldenNumber& x) const noexcept { return x.hash(); }
};
