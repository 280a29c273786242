#include "griess/axial/algebra.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace griess::axial {
namespace {

bool matrix_less(const RatMatrix& a, const RatMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      int c = Rational::compare(a(i, j), b(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

struct MatrixLess {
  bool operator()(const RatMatrix& a, const RatMatrix& b) const { return matrix_less(a, b); }
};

RatMatrix columns(const std::vector<Vec>& cols, std::size_t n) {
  RatMatrix m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  return m;
}

// Nonzero coordinate of v used to read off an eigenvalue.
std::optional<std::size_t> pivot(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return std::nullopt;
}

const std::vector<Rational>& axis_values() {
  static const std::vector<Rational> v{Rational(2), Rational(0), Rational(1, 2), Rational(1, 16)};
  return v;
}

}  // namespace

StructureAlgebra::StructureAlgebra(std::size_t n, std::vector<std::string> names)
    : dim(n), labels(std::move(names)), table(n, std::vector<Vec>(n, Vec(n))), gram(n, n) {
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  if (labels.size() != n) throw std::invalid_argument("StructureAlgebra: label count mismatch");
}

Vec StructureAlgebra::basis(std::size_t i) const {
  Vec v(dim);
  v.at(i) = Rational(1);
  return v;
}

Vec StructureAlgebra::product(const Vec& x, const Vec& y) const {
  if (x.size() != dim || y.size() != dim) throw std::invalid_argument("product: dimension mismatch");
  Vec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (!table[i][j][k].is_zero()) out[k] += s * table[i][j][k];
    }
  }
  return out;
}

Rational StructureAlgebra::form(const Vec& x, const Vec& y) const {
  Rational s;
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j)
      if (!y[j].is_zero()) s += x[i] * gram(i, j) * y[j];
  }
  return s;
}

bool StructureAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (table[i][j] != table[j][i]) return false;
  return true;
}

bool StructureAlgebra::is_form_symmetric() const { return gram.is_symmetric(); }

bool StructureAlgebra::is_form_associative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (form(table[i][j], basis(k)) != form(basis(i), table[j][k])) return false;
  return true;
}

StructureAlgebra build_3C() {
  StructureAlgebra a(3, {"e0", "e1", "e2"});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) {
        a.table[i][i][i] = Rational(2);
        a.gram(i, i) = Rational(1, 4);
      } else {
        std::size_t k = 3 - i - j;
        a.table[i][j][i] = Rational(1, 32);
        a.table[i][j][j] = Rational(1, 32);
        a.table[i][j][k] = Rational(-1, 32);
        a.gram(i, j) = Rational(1, 256);
      }
    }
  return a;
}

StructureAlgebra build_G9() {
  std::vector<std::string> names;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) names.push_back("e" + std::to_string(i) + std::to_string(j));
  StructureAlgebra a(9, names);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int j2 = 0; j2 < 3; ++j2) {
          std::size_t p = g9_index(i, j), q = g9_index(i2, j2);
          if (p == q) {
            a.table[p][p][p] = Rational(2);
            a.gram(p, p) = Rational(1, 4);
            continue;
          }
          std::size_t r = g9_index(-i - i2, -j - j2);
          a.table[p][q][p] += Rational(1, 32);
          a.table[p][q][q] += Rational(1, 32);
          a.table[p][q][r] -= Rational(1, 32);
          a.gram(p, q) = Rational(1, 256);
        }
  return a;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Rational& s, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= s;
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

std::optional<Rational> certify_virasoro(const StructureAlgebra& a, const Vec& v) {
  if (a.product(v, v) != scale(Rational(2), v)) return std::nullopt;
  return Rational(2) * a.form(v, v);
}

RatMatrix adjoint(const StructureAlgebra& a, const Vec& v) {
  RatMatrix m(a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j) {
    Vec col = a.product(v, a.basis(j));
    for (std::size_t i = 0; i < a.dim; ++i) m(i, j) = col[i];
  }
  return m;
}

std::map<Rational, std::size_t> eigen_dimensions(const StructureAlgebra& a, const Vec& v,
                                                 const std::vector<Rational>& values) {
  RatMatrix ad = adjoint(a, v);
  std::map<Rational, std::size_t> out;
  for (const auto& l : values) out[l] = num::eigenspace(ad, l).size();
  return out;
}

AxisCertificate certify_axis(const StructureAlgebra& a, const Vec& e) {
  AxisCertificate c;
  auto cc = certify_virasoro(a, e);
  c.idempotent = cc.has_value();
  if (cc) c.central_charge = *cc;
  c.spectrum = eigen_dimensions(a, e, axis_values());
  std::size_t total = 0;
  for (const auto& [l, d] : c.spectrum) total += d;
  c.exhausted = total == a.dim;
  return c;
}

bool is_automorphism(const StructureAlgebra& a, const RatMatrix& m) {
  if (m.rows() != a.dim || m.cols() != a.dim) return false;
  std::vector<Vec> img;
  for (std::size_t i = 0; i < a.dim; ++i) img.push_back(m * a.basis(i));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i; j < a.dim; ++j) {
      if (m * a.table[i][j] != a.product(img[i], img[j])) return false;
      if (a.form(img[i], img[j]) != a.gram(i, j)) return false;
    }
  return true;
}

LinearEndo miyamoto_tau(const StructureAlgebra& a, const Vec& e) {
  auto cert = certify_axis(a, e);
  if (!cert.idempotent || cert.central_charge != Rational(1, 2))
    throw std::domain_error("miyamoto_tau: not an Ising vector");
  if (!cert.exhausted) throw std::domain_error("miyamoto_tau: eigenspaces do not exhaust the algebra");
  RatMatrix ad = adjoint(a, e);
  std::vector<Vec> cols;
  std::vector<Rational> signs;
  for (const auto& l : axis_values())
    for (auto& v : num::eigenspace(ad, l)) {
      cols.push_back(v);
      signs.push_back(l == Rational(1, 16) ? Rational(-1) : Rational(1));
    }
  RatMatrix t = columns(cols, a.dim);
  auto ti = num::inverse(t);
  if (!ti) throw std::domain_error("miyamoto_tau: eigenvectors are dependent");
  RatMatrix d(a.dim, a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) d(i, i) = signs[i];
  LinearEndo out{t * d * *ti, false};
  out.automorphism = is_automorphism(a, out.matrix);
  return out;
}

bool RestrictedEndo::is_identity() const { return matrix == RatMatrix::identity(matrix.rows()); }

RestrictedEndo miyamoto_sigma(const StructureAlgebra& a, const Vec& e) {
  auto cert = certify_axis(a, e);
  if (!cert.idempotent || cert.central_charge != Rational(1, 2))
    throw std::domain_error("miyamoto_sigma: not an Ising vector");
  if (!cert.exhausted) throw std::domain_error("miyamoto_sigma: eigenspaces do not exhaust the algebra");
  RatMatrix ad = adjoint(a, e);
  RestrictedEndo out;
  std::vector<Rational> signs;
  for (const auto& l : {Rational(2), Rational(0), Rational(1, 2)})
    for (auto& v : num::eigenspace(ad, l)) {
      out.fixed_basis.push_back(v);
      signs.push_back(l == Rational(1, 2) ? Rational(-1) : Rational(1));
    }
  const std::size_t n = out.fixed_basis.size();
  out.matrix = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) out.matrix(i, i) = signs[i];
  // products of the fixed basis, in fixed-basis coordinates
  RatMatrix basis = columns(out.fixed_basis, a.dim);
  out.automorphism = true;
  for (std::size_t i = 0; i < n && out.automorphism; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto coords = num::solve_linear(basis, a.product(out.fixed_basis[i], out.fixed_basis[j]));
      if (!coords || scale(signs[i] * signs[j], *coords) != out.matrix * *coords) {
        out.automorphism = false;
        break;
      }
    }
  return out;
}

std::size_t MatrixGroup::index_of(const RatMatrix& m) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == m) return i;
  return elements.size();
}

std::size_t MatrixGroup::element_order(std::size_t idx) const {
  const RatMatrix id = RatMatrix::identity(elements[idx].rows());
  RatMatrix p = elements[idx];
  std::size_t k = 1;
  while (p != id) {
    p = p * elements[idx];
    ++k;
    if (k > elements.size()) throw std::logic_error("element_order: element of infinite order");
  }
  return k;
}

std::vector<std::size_t> MatrixGroup::involutions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (element_order(i) == 2) out.push_back(i);
  return out;
}

std::vector<std::size_t> MatrixGroup::three_part() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (3 % element_order(i) == 0) out.push_back(i);
  return out;
}

bool MatrixGroup::is_normal_subgroup(const std::vector<std::size_t>& subset) const {
  std::vector<bool> in(elements.size(), false);
  for (auto i : subset) in[i] = true;
  for (auto i : subset)
    for (auto j : subset)
      if (!in[index_of(elements[i] * elements[j])]) return false;
  for (std::size_t g = 0; g < elements.size(); ++g) {
    auto gi = num::inverse(elements[g]);
    for (auto s : subset) {
      std::size_t c = index_of(elements[g] * elements[s] * *gi);
      if (c == elements.size() || !in[c]) return false;
    }
  }
  return true;
}

bool MatrixGroup::all_conjugate(const std::vector<std::size_t>& subset) const {
  if (subset.empty()) return true;
  std::vector<bool> orbit(elements.size(), false);
  const RatMatrix& x = elements[subset.front()];
  for (const auto& g : elements) {
    auto gi = num::inverse(g);
    std::size_t c = index_of(g * x * *gi);
    if (c < elements.size()) orbit[c] = true;
  }
  std::size_t count = std::count(orbit.begin(), orbit.end(), true);
  if (count != subset.size()) return false;
  return std::all_of(subset.begin(), subset.end(), [&](std::size_t i) { return orbit[i]; });
}

MatrixGroup group_closure(const std::vector<LinearEndo>& gens, std::size_t bound) {
  if (gens.empty()) throw std::invalid_argument("group_closure: no generators");
  for (const auto& g : gens)
    if (!g.automorphism) throw std::invalid_argument("group_closure: generator is not a verified automorphism");
  MatrixGroup out;
  std::map<RatMatrix, std::size_t, MatrixLess> seen;
  RatMatrix id = RatMatrix::identity(gens.front().matrix.rows());
  seen.emplace(id, 0);
  out.elements.push_back(id);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      RatMatrix next = out.elements[cur] * g.matrix;
      if (seen.count(next)) continue;
      if (out.elements.size() >= bound) throw std::length_error("group_closure: bound exceeded");
      seen.emplace(next, out.elements.size());
      out.elements.push_back(next);
      queue.push_back(out.elements.size() - 1);
    }
  }
  return out;
}

GroupShape analyse_shape(const MatrixGroup& g) {
  GroupShape s;
  s.order = g.order();
  auto inv = g.involutions();
  s.involutions = inv.size();
  s.involutions_conjugate = g.all_conjugate(inv);
  auto o3 = g.three_part();
  s.o3_order = o3.size();
  s.o3_normal = g.is_normal_subgroup(o3);
  s.o3_elementary = std::all_of(o3.begin(), o3.end(), [&](std::size_t i) { return i == 0 || g.element_order(i) == 3; });
  s.quotient_order = o3.empty() ? 0 : s.order / o3.size();
  return s;
}

std::optional<std::vector<Rational>> highest_weight_check(const StructureAlgebra& a, const Vec& v,
                                                          const std::vector<Vec>& frame) {
  auto p = pivot(v);
  if (!p) return std::nullopt;
  std::vector<Rational> out;
  for (const auto& f : frame) {
    Vec w = a.product(f, v);
    Rational l = w[*p] / v[*p];
    if (w != scale(l, v)) return std::nullopt;
    out.push_back(l);
  }
  return out;
}

bool isomorphism_check(const StructureAlgebra& a, const StructureAlgebra& b, const std::vector<std::size_t>& map) {
  if (a.dim != b.dim || map.size() != a.dim) throw std::invalid_argument("isomorphism_check: dimension mismatch");
  std::vector<bool> hit(a.dim, false);
  for (auto m : map) {
    if (m >= a.dim || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (a.gram(i, j) != b.gram(map[i], map[j])) return false;
      for (std::size_t k = 0; k < a.dim; ++k)
        if (a.table[i][j][k] != b.table[map[i]][map[j]][map[k]]) return false;
    }
  return true;
}

G9Elements g9_elements() {
  G9Elements out;
  Vec all(9);
  for (auto& x : all) x = Rational(1);
  out.omega = scale(Rational(8, 9), all);
  const std::array<std::array<std::pair<int, int>, 2>, 4> lines{{
      {{{0, 1}, {0, 2}}},
      {{{1, 0}, {2, 0}}},
      {{{1, 1}, {2, 2}}},
      {{{1, 2}, {2, 1}}},
  }};
  for (std::size_t l = 0; l < 4; ++l) {
    Vec v(9);
    v[g9_index(0, 0)] = Rational(32, 33) - Rational(1);
    for (auto [i, j] : lines[l]) v[g9_index(i, j)] = Rational(32, 33);
    out.a[l] = v;
  }
  Vec line(9);
  for (int j = 0; j < 3; ++j) line[g9_index(0, j)] = Rational(32, 33);
  out.b1 = sub(out.omega, line);
  return out;
}

LieType lie_type(const std::string& name) {
  if (name.size() > 2 && name.compare(0, 2, "sl") == 0) {
    int n = std::stoi(name.substr(2));
    if (n < 2) throw std::invalid_argument("lie_type: sl rank too small");
    return {name, n - 1, n * n - 1, n};
  }
  if (name == "E6") return {name, 6, 78, 12};
  if (name == "E7") return {name, 7, 133, 18};
  if (name == "E8") return {name, 8, 248, 30};
  throw std::invalid_argument("lie_type: unknown type " + name);
}

Rational affine_central_charge(const LieType& g, int k) {
  if (k < 1) throw std::invalid_argument("affine_central_charge: level must be positive");
  return Rational(static_cast<long long>(k) * g.dim, k + g.dual_coxeter);
}

Rational parafermion_central_charge(const LieType& g, int k) { return affine_central_charge(g, k) - Rational(g.rank); }

std::string serialize_algebra(const StructureAlgebra& a) {
  std::ostringstream os;
  os << "griess-lab-alg v1 " << a.dim << '\n';
  for (std::size_t i = 0; i < a.dim; ++i) os << "label " << i << ' ' << a.labels[i] << '\n';
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        if (!a.table[i][j][k].is_zero()) os << i << ' ' << j << ' ' << k << ' ' << a.table[i][j][k].to_string() << '\n';
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      if (!a.gram(i, j).is_zero()) os << "gram " << i << ' ' << j << ' ' << a.gram(i, j).to_string() << '\n';
  return os.str();
}

std::optional<StructureAlgebra> parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  std::istringstream head(line);
  std::string magic, version;
  std::size_t dim = 0;
  if (!(head >> magic >> version >> dim) || magic != "griess-lab-alg" || version != "v1" || dim == 0) return std::nullopt;
  StructureAlgebra a(dim);
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string first;
      ls >> first;
      if (first == "label") {
        std::size_t i;
        std::string name;
        if (!(ls >> i >> name) || i >= dim) return std::nullopt;
        a.labels[i] = name;
      } else if (first == "gram") {
        std::size_t i, j;
        std::string v;
        if (!(ls >> i >> j >> v) || i >= dim || j >= dim) return std::nullopt;
        a.gram(i, j) = Rational::parse(v);
      } else {
        std::size_t i = std::stoul(first), j, k;
        std::string v;
        if (!(ls >> j >> k >> v) || i >= dim || j >= dim || k >= dim) return std::nullopt;
        a.table[i][j][k] = Rational::parse(v);
      }
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return a;
}

}  // namespace griess::axial
