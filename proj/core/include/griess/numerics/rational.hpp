#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace griess::num {

// Exact rational number, always stored in lowest terms with a positive
// denominator. Values whose numerator and denominator fit in 64 bits are kept
// inline; anything larger is promoted to a shared immutable GMP rational.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit from integers is intended
  Rational(int n) : num_(n) {}        // NOLINT
  Rational(long long n, long long d);
  explicit Rational(const mpq_class& q);
  explicit Rational(const mpz_class& z);

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  // Only valid when the value is an integer that fits in 64 bits.
  long long to_int64() const;
  bool fits_int64() const { return !big_ && den_ == 1; }
  double to_double() const;

  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return compare(a, b) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return compare(a, b) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return compare(a, b) >= 0; }

  static int compare(const Rational& a, const Rational& b);

  Rational inverse() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational pow(int e) const;

  // floor and ceiling as big integers
  mpz_class floor() const;
  mpz_class ceil() const;

  bool is_small() const { return !big_; }

 private:
  static Rational from_i128(__int128 n, __int128 d);
  void assign_mpq(mpq_class q);

  long long num_ = 0;
  long long den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace griess::num
