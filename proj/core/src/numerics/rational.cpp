#include "griess/numerics/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace griess::num {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax64 = std::numeric_limits<long long>::max();
constexpr i128 kMin64 = std::numeric_limits<long long>::min();

u128 gcd_u128(u128 a, u128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  // 64-bit fast path
  if ((a >> 64) == 0 && (b >> 64) == 0) {
    unsigned long long x = static_cast<unsigned long long>(a);
    unsigned long long y = static_cast<unsigned long long>(b);
    while (y != 0) {
      unsigned long long t = x % y;
      x = y;
      y = t;
    }
    return x;
  }
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<unsigned long long>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<unsigned long long>(m)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits64(const mpz_class& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { assign_mpq(q); }

Rational::Rational(const mpz_class& z) { assign_mpq(mpq_class(z)); }

void Rational::assign_mpq(mpq_class q) {
  q.canonicalize();
  if (fits64(q.get_num()) && fits64(q.get_den())) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }
}

Rational Rational::from_i128(i128 n, i128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 an = n < 0 ? static_cast<u128>(-n) : static_cast<u128>(n);
  u128 g = gcd_u128(an, static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  Rational r;
  if (n >= kMin64 && n <= kMax64 && d <= kMax64) {
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
  } else {
    mpq_class q(mpz_from_i128(n), mpz_from_i128(d));
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
  }
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  if (s.front() == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

long long Rational::to_int64() const {
  if (big_ || den_ != 1) throw std::domain_error("Rational::to_int64: not a small integer: " + to_string());
  return num_;
}

double Rational::to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_ || num_ == kMin64) return Rational(mpq_class(-to_mpq()));
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (o.num_ == 0) return *this;
    if (num_ == 0) return *this = o;
    if (den_ == o.den_) {
      *this = from_i128(static_cast<i128>(num_) + o.num_, den_);
    } else {
      *this = from_i128(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                        static_cast<i128>(den_) * o.den_);
    }
    return *this;
  }
  assign_mpq(to_mpq() + o.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (o.num_ == 0) return *this;
    if (den_ == o.den_) {
      *this = from_i128(static_cast<i128>(num_) - o.num_, den_);
    } else {
      *this = from_i128(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                        static_cast<i128>(den_) * o.den_);
    }
    return *this;
  }
  assign_mpq(to_mpq() - o.to_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) return *this = Rational();
    if (o.num_ == 1 && o.den_ == 1) return *this;
    *this = from_i128(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
    return *this;
  }
  assign_mpq(to_mpq() * o.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!big_ && !o.big_) {
    *this = from_i128(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
    return *this;
  }
  assign_mpq(to_mpq() / o.to_mpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // canonical forms: a big value never equals a small one
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

int Rational::compare(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 l = static_cast<i128>(a.num_) * b.den_;
    i128 r = static_cast<i128>(b.num_) * a.den_;
    return (l > r) - (l < r);
  }
  return cmp(a.to_mpq(), b.to_mpq());
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  if (!big_) return from_i128(den_, num_);
  return Rational(mpq_class(1 / *big_));
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Rational result(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

mpz_class Rational::floor() const {
  mpq_class q = to_mpq();
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class Rational::ceil() const {
  mpq_class q = to_mpq();
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace griess::num
