#include "griess/lattice/e8_cube.hpp"

#include <stdexcept>

namespace griess::lat {

AmbientVec block3(const AmbientVec& x, const AmbientVec& y, const AmbientVec& z) {
  AmbientVec v;
  v.reserve(x.size() + y.size() + z.size());
  v.insert(v.end(), x.begin(), x.end());
  v.insert(v.end(), y.begin(), y.end());
  v.insert(v.end(), z.begin(), z.end());
  return v;
}

AmbientVec eta(int i, const AmbientVec& x) {
  AmbientVec v(3 * x.size());
  for (std::size_t k = 0; k < x.size(); ++k) v[static_cast<std::size_t>(i) * x.size() + k] = x[k];
  return v;
}

int mod3(const Rational& x) {
  if (!x.is_integer()) throw std::invalid_argument("mod3: non-integral value");
  mpz_class r;
  mpz_class n = x.numerator();
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), 3);
  return static_cast<int>(r.get_si());
}

AmbientVec find_a(const Lattice& e8, const ShellCache* cache) {
  const auto roots = shell(e8, 2, cache).vectors;
  for (long long n : {2LL, 4LL, 6LL, 8LL}) {
    for (const auto& a : shell(e8, n, cache).vectors) {
      std::vector<AmbientVec> kr;
      for (const auto& r : roots)
        if (mod3(inner(r, a)) == 0) kr.push_back(r);
      if (kr.size() != 72) continue;
      auto k = sublattice_K(e8, a);
      if (k.index != 3) continue;
      auto info = root_system_type_from_roots(k.lattice, kr);
      if (info.spans && info.type == "A8") return a;
    }
  }
  throw std::runtime_error("find_a: no suitable vector in shells 2, 4, 6, 8");
}

E8Cube build_e8_cube(const ShellCache* cache) {
  E8Cube c;
  c.e8 = make_E8();
  const std::size_t r = c.e8.rank();
  std::vector<AmbientVec> l_rows, m_rows, n_rows, nt_rows, e_rows;
  const AmbientVec zero(8);
  for (int i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < r; ++j) l_rows.push_back(eta(i, c.e8.basis_vector(j)));
  for (std::size_t j = 0; j < r; ++j) {
    const AmbientVec x = c.e8.basis_vector(j);
    const AmbientVec nx = neg(x);
    m_rows.push_back(block3(x, nx, zero));
    n_rows.push_back(block3(zero, x, nx));
    nt_rows.push_back(block3(x, zero, nx));
    e_rows.push_back(block3(x, x, x));
  }
  c.L = from_vectors("E8^3", l_rows);
  c.M = from_vectors("M", m_rows);
  c.N = from_vectors("N", n_rows);
  c.Nt = from_vectors("Nt", nt_rows);
  c.E = from_vectors("E", e_rows);
  c.MN = sum_of("M+N", {&c.M, &c.N});

  c.roots = shell(c.e8, 2, cache).vectors;
  c.a = find_a(c.e8, cache);
  c.K = sublattice_K(c.e8, c.a).lattice;
  for (const auto& beta : c.roots) {
    switch (mod3(inner(beta, c.a))) {
      case 0:
        c.k_roots.push_back(beta);
        break;
      case 1:
        c.delta1.push_back(beta);
        break;
      default:
        c.delta2.push_back(beta);
    }
  }
  c.b = c.delta1.front();
  return c;
}

}  // namespace griess::lat
