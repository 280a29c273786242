#include "griess/numerics/matrix.hpp"

#include <sstream>

namespace griess::num {
namespace {

using IntRow = std::vector<mpz_class>;

// Scales a row to a primitive integer row with a positive leading entry.
void make_primitive(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x == 0) continue;
    g = gcd(g, x);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

RrefResult<Rational> rref_fraction_free(const RatMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<IntRow> a(rows, IntRow(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < cols; ++j) l = lcm(l, m(i, j).denominator());
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class q = m(i, j).to_mpq() * l;
      a[i][j] = q.get_num();
    }
    make_primitive(a[i]);
  }

  RrefResult<Rational> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpz_class piv = a[r][c];
      mpz_class f = a[i][c];
      mpz_class g = gcd(piv, f);
      piv /= g;
      f /= g;
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = piv * a[i][j] - f * a[r][j];
      make_primitive(a[i]);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = RatMatrix(rows, cols);
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& piv = a[i][out.pivots[i]];
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i][j] != 0) out.reduced(i, j) = Rational(mpq_class(a[i][j], piv));
  }
  return out;
}

std::string to_string(const Vec<Rational>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

}  // namespace griess::num
