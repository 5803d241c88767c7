#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "hexarc/error.hpp"

namespace hexarc {

inline bool is_small_prime(int p) {
  if (p < 2 || p > 255) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Residue in GF(p) for a small prime p. All arithmetic is exact and modular;
/// elements carry their modulus and mixing moduli is an error.
class Fp {
public:
  Fp() : v_(0), p_(2) {}

  Fp(int value, int modulus) {
    if (!is_small_prime(modulus))
      fail(Errc::unsupported_field, "field order must be a prime < 256, got " + std::to_string(modulus));
    int r = value % modulus;
    if (r < 0) r += modulus;
    v_ = static_cast<std::uint8_t>(r);
    p_ = static_cast<std::uint8_t>(modulus);
  }

  int value() const { return v_; }
  int modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    a.check(b);
    int s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    a.v_ = static_cast<std::uint8_t>(s);
    return a;
  }

  friend Fp operator-(Fp a, Fp b) {
    a.check(b);
    int s = a.v_ - b.v_;
    if (s < 0) s += a.p_;
    a.v_ = static_cast<std::uint8_t>(s);
    return a;
  }

  friend Fp operator*(Fp a, Fp b) {
    a.check(b);
    a.v_ = static_cast<std::uint8_t>((a.v_ * b.v_) % a.p_);
    return a;
  }

  Fp operator-() const {
    Fp r = *this;
    if (r.v_ != 0) r.v_ = static_cast<std::uint8_t>(r.p_ - r.v_);
    return r;
  }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }
  friend std::strong_ordering operator<=>(Fp a, Fp b) { return a.v_ <=> b.v_; }

private:
  void check(Fp other) const {
    if (p_ != other.p_) fail(Errc::bad_argument, "mixed field moduli");
  }

  std::uint8_t v_;
  std::uint8_t p_;
};

/// Coordinate vector X0..X6 of the ambient 7-dimensional space over GF(p).
struct Vec7 {
  std::array<Fp, 7> c;

  static Vec7 zero(int modulus) {
    Vec7 v;
    v.c.fill(Fp(0, modulus));
    return v;
  }

  static Vec7 from_values(const std::array<int, 7>& values, int modulus) {
    Vec7 v;
    for (int i = 0; i < 7; ++i) v.c[i] = Fp(values[i], modulus);
    return v;
  }

  int modulus() const { return c[0].modulus(); }
  Fp operator[](int i) const { return c[i]; }

  bool is_zero() const {
    for (const Fp& x : c)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Vec7 operator+(const Vec7& a, const Vec7& b) {
    Vec7 r;
    for (int i = 0; i < 7; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }

  friend Vec7 operator*(Fp lambda, const Vec7& v) {
    Vec7 r;
    for (int i = 0; i < 7; ++i) r.c[i] = lambda * v.c[i];
    return r;
  }

  friend bool operator==(const Vec7& a, const Vec7& b) { return a.c == b.c; }
  friend auto operator<=>(const Vec7& a, const Vec7& b) = default;
};

/// Point of PG(6,p): a nonzero Vec7 scaled so its first nonzero coordinate
/// is 1. Equality of points is equality of the canonical coordinate arrays.
class ProjPoint {
public:
  static ProjPoint normalize(const Vec7& v) {
    if (v.is_zero()) fail(Errc::bad_argument, "cannot projectivize the zero vector");
    int q = v.modulus();
    for (int lam = 1; lam < q; ++lam) {
      Vec7 w = Fp(lam, q) * v;
      for (const Fp& x : w.c) {
        if (x.is_zero()) continue;
        if (x.value() == 1) return ProjPoint(w);
        break;
      }
    }
    fail(Errc::bad_argument, "no normalizing scalar found");  // unreachable for prime fields
  }

  const Vec7& coords() const { return v_; }
  int modulus() const { return v_.modulus(); }
  Fp operator[](int i) const { return v_[i]; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.v_ == b.v_; }
  friend auto operator<=>(const ProjPoint& a, const ProjPoint& b) = default;

private:
  explicit ProjPoint(const Vec7& v) : v_(v) {}
  Vec7 v_;
};

}  // namespace hexarc
