#pragma once

#include <iosfwd>
#include <string>

#include "griess/numerics/rational.hpp"

namespace griess::num {

/// Element re + zc*zeta of Q(zeta), zeta a primitive cube root of unity
/// (zeta^2 + zeta + 1 = 0).
class Eisenstein {
 public:
  Eisenstein() = default;
  Eisenstein(Rational re) : re_(std::move(re)) {}  // NOLINT: rationals embed
  Eisenstein(int re) : re_(re) {}                  // NOLINT
  Eisenstein(long long re) : re_(re) {}            // NOLINT
  Eisenstein(Rational re, Rational zc) : re_(std::move(re)), zc_(std::move(zc)) {}

  static Eisenstein zeta() { return {Rational(0), Rational(1)}; }
  static Eisenstein zeta_pow(int k);
  /// 1 + 2*zeta, a square root of -3.
  static Eisenstein sqrt_minus3() { return {Rational(1), Rational(2)}; }

  const Rational& re() const { return re_; }
  const Rational& zc() const { return zc_; }

  bool is_zero() const { return re_.is_zero() && zc_.is_zero(); }
  bool is_rational() const { return zc_.is_zero(); }

  /// Complex conjugation: zeta -> zeta^2 = -1 - zeta.
  Eisenstein conj() const { return {re_ - zc_, -zc_}; }
  /// a^2 - ab + b^2, the field norm to Q.
  Rational norm() const { return re_ * re_ - re_ * zc_ + zc_ * zc_; }
  Eisenstein inverse() const;

  Eisenstein operator-() const { return {-re_, -zc_}; }
  Eisenstein& operator+=(const Eisenstein& o) {
    re_ += o.re_;
    zc_ += o.zc_;
    return *this;
  }
  Eisenstein& operator-=(const Eisenstein& o) {
    re_ -= o.re_;
    zc_ -= o.zc_;
    return *this;
  }
  Eisenstein& operator*=(const Eisenstein& o);
  Eisenstein& operator*=(const Rational& q) {
    re_ *= q;
    zc_ *= q;
    return *this;
  }
  Eisenstein& operator/=(const Eisenstein& o) { return *this *= o.inverse(); }

  friend Eisenstein operator+(Eisenstein a, const Eisenstein& b) { return a += b; }
  friend Eisenstein operator-(Eisenstein a, const Eisenstein& b) { return a -= b; }
  friend Eisenstein operator*(Eisenstein a, const Eisenstein& b) { return a *= b; }
  friend Eisenstein operator*(Eisenstein a, const Rational& b) { return a *= b; }
  friend Eisenstein operator*(const Rational& b, Eisenstein a) { return a *= b; }
  friend Eisenstein operator/(Eisenstein a, const Eisenstein& b) { return a /= b; }

  friend bool operator==(const Eisenstein& a, const Eisenstein& b) { return a.re_ == b.re_ && a.zc_ == b.zc_; }
  friend bool operator!=(const Eisenstein& a, const Eisenstein& b) { return !(a == b); }

  /// "re" for rational values, otherwise "re + zc*z".
  std::string to_string() const;

 private:
  Rational re_;
  Rational zc_;
};

std::ostream& operator<<(std::ostream& os, const Eisenstein& x);

}  // namespace griess::num
