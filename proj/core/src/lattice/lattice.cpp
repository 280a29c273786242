#include "griess/lattice/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace griess::lat {

using IntRow = std::vector<mpz_class>;

Rational inner(const AmbientVec& a, const AmbientVec& b) { return num::dot(a, b); }
Rational norm(const AmbientVec& a) { return num::dot(a, a); }

AmbientVec add(const AmbientVec& a, const AmbientVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  AmbientVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

AmbientVec sub(const AmbientVec& a, const AmbientVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  AmbientVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

AmbientVec scale(const Rational& s, const AmbientVec& a) {
  AmbientVec r(a);
  for (auto& x : r) x *= s;
  return r;
}

AmbientVec neg(const AmbientVec& a) { return scale(Rational(-1), a); }

bool is_zero(const AmbientVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

Lattice::Lattice(std::string label, RatMatrix basis) : label_(std::move(label)), basis_(std::move(basis)) {
  gram_ = basis_ * basis_.transpose();
  if (rank() == 0) return;
  auto ginv = num::inverse(gram_);
  if (!ginv) throw std::invalid_argument("Lattice '" + label_ + "': basis rows are linearly dependent");
  pinv_ = basis_.transpose() * *ginv;
}

Rational Lattice::det() const {
  if (rank() == 0) return Rational(1);
  return num::determinant(gram_);
}

bool Lattice::is_integral() const {
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (!gram_(i, j).is_integer()) return false;
  return true;
}

bool Lattice::is_even() const {
  if (!is_integral()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (!(gram_(i, i) / Rational(2)).is_integer()) return false;
  return true;
}

std::optional<num::Vec<Rational>> Lattice::coordinates(const AmbientVec& v) const {
  if (v.size() != ambient_dim()) throw std::invalid_argument("coordinates: dimension mismatch");
  if (rank() == 0) {
    if (is_zero(v)) return num::Vec<Rational>{};
    return std::nullopt;
  }
  num::Vec<Rational> x(rank());
  for (std::size_t j = 0; j < rank(); ++j)
    for (std::size_t k = 0; k < ambient_dim(); ++k)
      if (!v[k].is_zero() && !pinv_(k, j).is_zero()) x[j] += v[k] * pinv_(k, j);
  if (from_coordinates(x) != v) return std::nullopt;
  return x;
}

bool Lattice::contains(const AmbientVec& v) const {
  auto x = coordinates(v);
  if (!x) return false;
  return std::all_of(x->begin(), x->end(), [](const Rational& c) { return c.is_integer(); });
}

AmbientVec Lattice::from_coordinates(const num::Vec<Rational>& x) const {
  if (x.size() != rank()) throw std::invalid_argument("from_coordinates: rank mismatch");
  AmbientVec v(ambient_dim());
  for (std::size_t j = 0; j < rank(); ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t k = 0; k < ambient_dim(); ++k)
      if (!basis_(j, k).is_zero()) v[k] += x[j] * basis_(j, k);
  }
  return v;
}

Lattice make_A(int n) {
  if (n < 1) throw std::invalid_argument("make_A: n must be >= 1");
  RatMatrix b(n, n + 1);
  for (int i = 0; i < n; ++i) {
    b(i, i) = Rational(1);
    b(i, i + 1) = Rational(-1);
  }
  return Lattice("A" + std::to_string(n), std::move(b));
}

Lattice make_E8() {
  const Rational h(1, 2);
  std::vector<AmbientVec> rows;
  auto unit = [](std::initializer_list<std::pair<int, int>> entries) {
    AmbientVec v(8);
    for (auto [i, x] : entries) v[i] = Rational(x);
    return v;
  };
  rows.push_back(unit({{0, 1}, {1, -1}}));
  rows.push_back(unit({{1, 1}, {2, -1}}));
  rows.push_back(unit({{2, 1}, {3, -1}}));
  rows.push_back(unit({{3, 1}, {4, -1}}));
  rows.push_back(unit({{4, 1}, {5, -1}}));
  rows.push_back(unit({{5, 1}, {6, 1}}));
  rows.push_back(AmbientVec(8, -h));
  rows.push_back(unit({{5, 1}, {6, -1}}));
  return from_vectors("E8", rows);
}

Lattice make_Z(int n) {
  if (n < 1) throw std::invalid_argument("make_Z: n must be >= 1");
  return Lattice("Z" + std::to_string(n), RatMatrix::identity(n));
}

Lattice sqrt2_scale(const Lattice& l) {
  const std::size_t d = l.ambient_dim();
  RatMatrix b(l.rank(), 2 * d);
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t k = 0; k < d; ++k) {
      b(i, k) = l.basis()(i, k);
      b(i, d + k) = -l.basis()(i, k);
    }
  return Lattice("sqrt2" + l.label(), std::move(b));
}

Lattice direct_sum(const Lattice& a, const Lattice& b, std::string label) {
  RatMatrix m(a.rank() + b.rank(), a.ambient_dim() + b.ambient_dim());
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t k = 0; k < a.ambient_dim(); ++k) m(i, k) = a.basis()(i, k);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t k = 0; k < b.ambient_dim(); ++k) m(a.rank() + i, a.ambient_dim() + k) = b.basis()(i, k);
  if (label.empty()) label = a.label() + "+" + b.label();
  return Lattice(std::move(label), std::move(m));
}

Lattice tensor_product(const Lattice& a, const Lattice& b, std::string label) {
  const std::size_t da = a.ambient_dim();
  const std::size_t db = b.ambient_dim();
  RatMatrix m(a.rank() * b.rank(), da * db);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j)
      for (std::size_t p = 0; p < da; ++p) {
        if (a.basis()(i, p).is_zero()) continue;
        for (std::size_t q = 0; q < db; ++q) m(i * b.rank() + j, p * db + q) = a.basis()(i, p) * b.basis()(j, q);
      }
  if (label.empty()) label = a.label() + "x" + b.label();
  return Lattice(std::move(label), std::move(m));
}

Lattice from_vectors(std::string label, const std::vector<AmbientVec>& rows) {
  return Lattice(std::move(label), RatMatrix::from_rows(rows));
}

namespace {

// Euclidean row reduction over Z on the leading `ncols` columns; operations are
// applied to full rows so trailing columns record the unimodular transform.
std::size_t integer_echelon(std::vector<IntRow>& rows, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        for (std::size_t j = 0; j < rows[i].size(); ++j)
          if (rows[r][j] != 0) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) {
        if (rows[r][c] < 0)
          for (auto& x : rows[r]) x = -x;
        ++r;
        break;
      }
    }
  }
  return r;
}

mpz_class common_denominator(const std::vector<AmbientVec>& rows) {
  mpz_class l = 1;
  for (const auto& row : rows)
    for (const auto& x : row) l = lcm(l, x.denominator());
  return l;
}

}  // namespace

std::vector<IntRow> integer_row_basis(std::vector<IntRow> rows) {
  if (rows.empty()) return {};
  std::size_t r = integer_echelon(rows, rows.front().size());
  rows.resize(r);
  return rows;
}

std::vector<IntRow> integer_left_kernel(const std::vector<IntRow>& a) {
  if (a.empty()) return {};
  const std::size_t n = a.size();
  const std::size_t s = a.front().size();
  std::vector<IntRow> aug(n, IntRow(s + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < s; ++j) aug[i][j] = a[i][j];
    aug[i][s + i] = 1;
  }
  std::size_t r = integer_echelon(aug, s);
  std::vector<IntRow> ker;
  for (std::size_t i = r; i < n; ++i) ker.emplace_back(aug[i].begin() + static_cast<long>(s), aug[i].end());
  return ker;
}

Lattice sum_of(std::string label, const std::vector<const Lattice*>& parts) {
  std::vector<AmbientVec> gens;
  for (const auto* p : parts)
    for (std::size_t i = 0; i < p->rank(); ++i) gens.push_back(p->basis_vector(i));
  if (gens.empty()) throw std::invalid_argument("sum_of: no generators");
  mpz_class den = common_denominator(gens);
  std::vector<IntRow> rows;
  for (const auto& g : gens) {
    IntRow row;
    for (const auto& x : g) row.push_back(mpq_class(x.to_mpq() * den).get_num());
    rows.push_back(std::move(row));
  }
  rows = integer_row_basis(std::move(rows));
  std::vector<AmbientVec> basis;
  for (const auto& row : rows) {
    AmbientVec v;
    for (const auto& x : row) v.emplace_back(mpq_class(x, den));
    basis.push_back(std::move(v));
  }
  return from_vectors(std::move(label), basis);
}

Lattice build_standard(const std::string& name) {
  auto parse_rank = [&](std::size_t prefix) {
    try {
      int n = std::stoi(name.substr(prefix));
      if (n < 1) throw std::invalid_argument("");
      return n;
    } catch (const std::exception&) {
      throw std::invalid_argument("build_standard: invalid lattice name '" + name + "'");
    }
  };
  if (name == "E8") return make_E8();
  if (name == "sqrt2E8") return sqrt2_scale(make_E8());
  if (name.size() > 1 && name[0] == 'A') return make_A(parse_rank(1));
  if (name.size() > 1 && name[0] == 'Z') return make_Z(parse_rank(1));
  throw std::invalid_argument("build_standard: unknown lattice '" + name + "'");
}

Lattice annihilator(const Lattice& l, const Lattice& s, std::string label) {
  if (label.empty()) label = "Ann(" + s.label() + ")";
  RatMatrix pairing = l.basis() * s.basis().transpose();
  mpz_class den = 1;
  for (std::size_t i = 0; i < pairing.rows(); ++i)
    for (std::size_t j = 0; j < pairing.cols(); ++j) den = lcm(den, pairing(i, j).denominator());
  std::vector<IntRow> a(pairing.rows(), IntRow(pairing.cols()));
  for (std::size_t i = 0; i < pairing.rows(); ++i)
    for (std::size_t j = 0; j < pairing.cols(); ++j) a[i][j] = mpq_class(pairing(i, j).to_mpq() * den).get_num();
  auto ker = integer_left_kernel(a);
  std::vector<AmbientVec> rows;
  for (const auto& x : ker) {
    num::Vec<Rational> coords;
    for (const auto& c : x) coords.emplace_back(c);
    rows.push_back(l.from_coordinates(coords));
  }
  if (rows.empty()) return Lattice(std::move(label), RatMatrix(0, l.ambient_dim()));
  return from_vectors(std::move(label), rows);
}

KSublattice sublattice_K(const Lattice& e8, const AmbientVec& a) {
  std::vector<long long> f(e8.rank());
  std::size_t unit = e8.rank();
  for (std::size_t i = 0; i < e8.rank(); ++i) {
    Rational p = inner(e8.basis_vector(i), a);
    if (!p.is_integer()) throw std::invalid_argument("sublattice_K: a does not pair integrally with the lattice");
    mpz_class r;
    mpz_class z = p.numerator();
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), 3);
    f[i] = r.get_si();
    if (f[i] != 0 && unit == e8.rank()) unit = i;
  }
  if (unit == e8.rank()) return {e8.relabeled("K"), 1};
  // f(unit) is 1 or 2, its own inverse mod 3.
  std::vector<AmbientVec> rows;
  const AmbientVec bu = e8.basis_vector(unit);
  for (std::size_t i = 0; i < e8.rank(); ++i) {
    if (i == unit) {
      rows.push_back(scale(Rational(3), bu));
      continue;
    }
    long long c = (f[i] * f[unit]) % 3;
    rows.push_back(sub(e8.basis_vector(i), scale(Rational(c), bu)));
  }
  return {from_vectors("K", rows), 3};
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  mpz_class n = q.numerator();
  mpz_class d = q.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

}  // namespace griess::lat
