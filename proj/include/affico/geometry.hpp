#pragma once

// Exact 3-vectors over Q(tau)(sqrt k) and 3x3 matrices over Q(tau).

#include <affico/ext_number.hpp>
#include <affico/golden.hpp>

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>

namespace affico {

struct Vec3d {
  double x = 0, y = 0, z = 0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  friend Vec3d operator-(const Vec3d& a, const Vec3d& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3d operator+(const Vec3d& a, const Vec3d& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3d operator*(double s, const Vec3d& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend double dot(const Vec3d& a, const Vec3d& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
  friend Vec3d cross(const Vec3d& a, const Vec3d& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
  }
};

class Vec3E {
 public:
  Vec3E() = default;
  explicit Vec3E(const Radicand& k) : c_{ExtNumber(k), ExtNumber(k), ExtNumber(k)} {}
  Vec3E(ExtNumber x, ExtNumber y, ExtNumber z) : c_{std::move(x), std::move(y), std::move(z)} {
    if (!(c_[0].radicand() == c_[1].radicand()) || !(c_[0].radicand() == c_[2].radicand()))
      throw std::invalid_argument("radicand mismatch");
  }
  /// Lifts a Q(tau) vector into the workspace of radicand k.
  Vec3E(const GoldenNumber& x, const GoldenNumber& y, const GoldenNumber& z, const Radicand& k)
      : c_{ExtNumber(x, k), ExtNumber(y, k), ExtNumber(z, k)} {}

  const ExtNumber& operator[](std::size_t i) const { return c_[i]; }
  ExtNumber& operator[](std::size_t i) { return c_[i]; }
  const Radicand& radicand() const { return c_[0].radicand(); }

  Vec3E& operator+=(const Vec3E& o) {
    for (std::size_t i = 0; i < 3; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec3E& operator-=(const Vec3E& o) {
    for (std::size_t i = 0; i < 3; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec3E& operator*=(const GoldenNumber& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  Vec3E& operator*=(const ExtNumber& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend Vec3E operator+(Vec3E a, const Vec3E& b) { return a += b; }
  friend Vec3E operator-(Vec3E a, const Vec3E& b) { return a -= b; }
  friend Vec3E operator*(const GoldenNumber& s, Vec3E a) { return a *= s; }
  friend Vec3E operator*(const ExtNumber& s, Vec3E a) { return a *= s; }
  Vec3E operator-() const { return {-c_[0], -c_[1], -c_[2]}; }

  friend bool operator==(const Vec3E& a, const Vec3E& b) { return a.c_ == b.c_; }

  Vec3d to_double() const { return {c_[0].to_double(), c_[1].to_double(), c_[2].to_double()}; }

  std::size_t hash() const {
    return hash_combine(hash_combine(c_[0].hash(), c_[1].hash()), c_[2].hash());
  }

 private:
  std::array<ExtNumber, 3> c_;
};

inline ExtNumber dot(const Vec3E& u, const Vec3E& v) {
  ExtNumber s = u[0] * v[0];
  s += u[1] * v[1];
  s += u[2] * v[2];
  return s;
}
inline ExtNumber norm2(const Vec3E& v) { return dot(v, v); }
inline ExtNumber dist2(const Vec3E& u, const Vec3E& v) { return norm2(u - v); }

/// Lexicographic exact order on coordinates.
inline std::strong_ordering lex_compare(const Vec3E& a, const Vec3E& b) {
  for (std::size_t i = 0; i < 3; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

inline std::string format(const Vec3E& v) {
  return format(v[0]) + "," + format(v[1]) + "," + format(v[2]);
}

class Mat3G {
 public:
  Mat3G() = default;
  explicit Mat3G(std::array<GoldenNumber, 9> e) : e_(std::move(e)) {}

  static Mat3G identity() {
    Mat3G m;
    m(0, 0) = m(1, 1) = m(2, 2) = GoldenNumber(1);
    return m;
  }

  const GoldenNumber& operator()(std::size_t r, std::size_t c) const { return e_[3 * r + c]; }
  GoldenNumber& operator()(std::size_t r, std::size_t c) { return e_[3 * r + c]; }

  Mat3G transpose() const {
    Mat3G t;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Mat3G operator*(const Mat3G& a, const Mat3G& b) {
    Mat3G m;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        GoldenNumber s = a(r, 0) * b(0, c);
        s += a(r, 1) * b(1, c);
        s += a(r, 2) * b(2, c);
        m(r, c) = std::move(s);
      }
    return m;
  }

  friend Vec3E operator*(const Mat3G& m, const Vec3E& v) {
    Vec3E out(v.radicand());
    for (std::size_t r = 0; r < 3; ++r) {
      ExtNumber s = m(r, 0) * v[0];
      s += m(r, 1) * v[1];
      s += m(r, 2) * v[2];
      out[r] = std::move(s);
    }
    return out;
  }

  Mat3G operator-() const {
    Mat3G m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
  }

  GoldenNumber det() const {
    const Mat3G& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  GoldenNumber trace() const { return e_[0] + e_[4] + e_[8]; }

  bool is_orthogonal() const { return transpose() * *this == identity(); }

  friend bool operator==(const Mat3G& a, const Mat3G& b) { return a.e_ == b.e_; }

  /// Entry-wise exact lexicographic order (a then b coefficient).
  friend bool canonical_less(const Mat3G& x, const Mat3G& y) {
    for (std::size_t i = 0; i < 9; ++i) {
      if (int c = cmp(x.e_[i].a(), y.e_[i].a()); c != 0) return c < 0;
      if (int c = cmp(x.e_[i].b(), y.e_[i].b()); c != 0) return c < 0;
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (const auto& x : e_) h = hash_combine(h, x.hash());
    return h;
  }

 private:
  std::array<GoldenNumber, 9> e_;
};

inline Vec3E mat_apply(const Mat3G& m, const Vec3E& v) { return m * v; }
inline Mat3G mat_mul(const Mat3G& a, const Mat3G& b) { return a * b; }
inline GoldenNumber mat_det(const Mat3G& m) { return m.det(); }

struct Vec3Hash {
  std::size_t operator()(const Vec3E& v) const noexcept { return v.hash(); }
};
struct Mat3Hash {
  std::size_t operator()(const Mat3G& m) const noexcept { return m.hash(); }
};

}  // namespace affico
