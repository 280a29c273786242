#include "griess/numerics/eisenstein.hpp"

#include <ostream>
#include <stdexcept>

namespace griess::num {

Eisenstein Eisenstein::zeta_pow(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return {Rational(1), Rational(0)};
    case 1:
      return {Rational(0), Rational(1)};
    default:
      return {Rational(-1), Rational(-1)};
  }
}

Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
  if (o.zc_.is_zero()) return *this *= o.re_;
  if (zc_.is_zero()) {
    Rational r = re_;
    re_ = r * o.re_;
    zc_ = r * o.zc_;
    return *this;
  }
  // (a + b z)(c + d z) = (ac - bd) + (ad + bc - bd) z
  Rational bd = zc_ * o.zc_;
  Rational re = re_ * o.re_ - bd;
  Rational zc = re_ * o.zc_ + zc_ * o.re_ - bd;
  re_ = std::move(re);
  zc_ = std::move(zc);
  return *this;
}

Eisenstein Eisenstein::inverse() const {
  if (is_zero()) throw std::domain_error("Eisenstein: inverse of zero");
  Rational n = norm();
  Eisenstein c = conj();
  return {c.re_ / n, c.zc_ / n};
}

std::string Eisenstein::to_string() const {
  if (zc_.is_zero()) return re_.to_string();
  if (re_.is_zero()) return zc_.to_string() + "*z";
  std::string z = zc_.to_string();
  if (zc_.sign() < 0) return re_.to_string() + " - " + (-zc_).to_string() + "*z";
  return re_.to_string() + " + " + z + "*z";
}

std::ostream& operator<<(std::ostream& os, const Eisenstein& x) { return os << x.to_string(); }

}  // namespace griess::num
