#pragma once

// Elements p + q*sqrt(k) of Q(tau)(sqrt k) for a fixed positive radicand k.

#include <affico/golden.hpp>

#include <cmath>
#include <compare>
#include <memory>
#include <stdexcept>
#include <string>

namespace affico {

/// Shared handle to a radicand k > 0 in Q(tau). Handles compare by value.
/// k = 1 is the degenerate "no radical" workspace: sqrt(k) folds into the
/// rational part so that representations stay canonical.
class Radicand {
 public:
  Radicand() : k_(one()) {}
  explicit Radicand(GoldenNumber k) {
    if (k.sign() != Sign::positive) throw std::domain_error("radicand must be positive");
    k_ = k == GoldenNumber(1) ? one() : std::make_shared<const GoldenNumber>(std::move(k));
  }

  static Radicand unit() { return Radicand(); }
  static Radicand three() { return Radicand(GoldenNumber(3)); }
  static Radicand two_plus_tau() { return Radicand(GoldenNumber(2, 1)); }

  const GoldenNumber& value() const { return *k_; }
  bool is_one() const { return k_ == one() || *k_ == GoldenNumber(1); }
  double sqrt_double() const { return std::sqrt(k_->to_double()); }

  friend bool operator==(const Radicand& x, const Radicand& y) {
    return x.k_ == y.k_ || *x.k_ == *y.k_;
  }

 private:
  static const std::shared_ptr<const GoldenNumber>& one() {
    static const auto p = std::make_shared<const GoldenNumber>(1);
    return p;
  }
  std::shared_ptr<const GoldenNumber> k_;
};

class ExtNumber {
 public:
  ExtNumber() = default;
  explicit ExtNumber(Radicand k) : k_(std::move(k)) {}
  ExtNumber(GoldenNumber p, Radicand k) : p_(std::move(p)), k_(std::move(k)) {}
  ExtNumber(GoldenNumber p, GoldenNumber q, Radicand k)
      : p_(std::move(p)), q_(std::move(q)), k_(std::move(k)) {
    normalize();
  }

  /// sqrt(k) itself.
  static ExtNumber root(const Radicand& k) { return {GoldenNumber(0), GoldenNumber(1), k}; }

  const GoldenNumber& p() const { return p_; }
  const GoldenNumber& q() const { return q_; }
  const Radicand& radicand() const { return k_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  bool in_base_field() const { return q_.is_zero(); }

  ExtNumber& operator+=(const ExtNumber& o) {
    check(o);
    p_ += o.p_;
    q_ += o.q_;
    return *this;
  }
  ExtNumber& operator-=(const ExtNumber& o) {
    check(o);
    p_ -= o.p_;
    q_ -= o.q_;
    return *this;
  }
  // (p + q r)(p' + q' r) = (pp' + qq'k) + (pq' + qp') r
  ExtNumber& operator*=(const ExtNumber& o) {
    check(o);
    if (o.q_.is_zero()) {
      p_ *= o.p_;
      q_ *= o.p_;
      return *this;
    }
    if (q_.is_zero()) {
      q_ = p_ * o.q_;
      p_ *= o.p_;
      return *this;
    }
    GoldenNumber np = p_ * o.p_ + q_ * o.q_ * k_.value();
    GoldenNumber nq = p_ * o.q_ + q_ * o.p_;
    p_ = std::move(np);
    q_ = std::move(nq);
    return *this;
  }
  ExtNumber& operator/=(const ExtNumber& o) {
    check(o);
    return *this *= o.inverse();
  }

  /// Scale by a base-field element; never mixes radicands.
  ExtNumber& operator*=(const GoldenNumber& g) {
    p_ *= g;
    q_ *= g;
    return *this;
  }

  friend ExtNumber operator+(ExtNumber x, const ExtNumber& y) { return x += y; }
  friend ExtNumber operator-(ExtNumber x, const ExtNumber& y) { return x -= y; }
  friend ExtNumber operator*(ExtNumber x, const ExtNumber& y) { return x *= y; }
  friend ExtNumber operator/(ExtNumber x, const ExtNumber& y) { return x /= y; }
  friend ExtNumber operator*(ExtNumber x, const GoldenNumber& g) { return x *= g; }
  friend ExtNumber operator*(const GoldenNumber& g, ExtNumber x) { return x *= g; }
  ExtNumber operator-() const {
    ExtNumber r = *this;
    r.p_ = -r.p_;
    r.q_ = -r.q_;
    return r;
  }

  /// p - q sqrt(k).
  ExtNumber conj() const { return {p_, -q_, k_}; }

  ExtNumber inverse() const {
    // (p + q r)^-1 = (p - q r) / (p^2 - q^2 k); the denominator vanishes only at 0
    // because k is not a square in Q(tau) (or q == 0).
    GoldenNumber n = p_ * p_ - q_ * q_ * k_.value();
    if (n.is_zero()) throw std::domain_error("division by zero");
    GoldenNumber ni = n.inverse();
    return {p_ * ni, -q_ * ni, k_};
  }

  Sign sign() const {
    const Sign sp = p_.sign();
    const Sign sq = q_.sign();
    if (sp == Sign::zero) return sq;
    if (sq == Sign::zero || sp == sq) return sp;
    switch ((p_ * p_ - q_ * q_ * k_.value()).sign()) {
      case Sign::positive: return sp;
      case Sign::negative: return sq;
      default: return Sign::zero;
    }
  }

  double to_double() const { return p_.to_double() + q_.to_double() * k_.sqrt_double(); }

  friend bool operator==(const ExtNumber& x, const ExtNumber& y) {
    return x.k_ == y.k_ && x.p_ == y.p_ && x.q_ == y.q_;
  }

  friend std::strong_ordering operator<=>(const ExtNumber& x, const ExtNumber& y) {
    switch ((x - y).sign()) {
      case Sign::negative: return std::strong_ordering::less;
      case Sign::positive: return std::strong_ordering::greater;
      default: return std::strong_ordering::equal;
    }
  }

  std::size_t hash() const { return hash_combine(p_.hash(), q_.hash()); }

 private:
  void check(const ExtNumber& o) const {
    if (!(k_ == o.k_)) throw std::invalid_argument("radicand mismatch");
  }
  void normalize() {
    if (k_.is_one() && !q_.is_zero()) {
      p_ += q_;
      q_ = GoldenNumber(0);
    }
  }

  GoldenNumber p_;
  GoldenNumber q_;
  Radicand k_;
};

inline Sign sign(const ExtNumber& x) { return x.sign(); }
inline double to_double(const ExtNumber& x) { return x.to_double(); }

inline std::string format(const ExtNumber& x) {
  if (x.in_base_field()) return format(x.p());
  std::string out;
  if (!x.p().is_zero()) out = "(" + format(x.p()) + ")+";
  out += "(" + format(x.q()) + ")*sqrt(" + format(x.radicand().value()) + ")";
  return out;
}

}  // namespace affico

template <>
struct std::hash<affico::ExtNumber> {
  std::size_t operator()(const affico::ExtNumber& x) const noexcept { return x.hash(); }
};
