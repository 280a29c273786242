#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <filesystem>
#include <functional>
#include <random>
#include <set>

#include "griess/lattice/e8_cube.hpp"
#include "griess/lattice/glue.hpp"
#include "griess/lattice/lattice.hpp"
#include "griess/lattice/roots.hpp"
#include "griess/lattice/shell.hpp"

using namespace griess::lat;
using griess::num::RatMatrix;
using griess::num::Rational;

namespace {

// Vectors of the even-coordinate E8 model of norm <= max_norm, listed
// directly from the coordinate description (all-integer or all-half-odd
// entries with even sum), doubled to integers.
std::vector<std::array<int, 8>> e8_by_coordinates(int max_norm) {
  std::vector<std::array<int, 8>> out;
  auto visit = [&](const std::vector<int>& values) {
    std::array<int, 8> v{};
    std::function<void(int)> rec = [&](int k) {
      if (k == 8) {
        int sum = 0, nn = 0;
        for (int x : v) {
          sum += x;
          nn += x * x;
        }
        if (sum % 4 == 0 && nn <= 4 * max_norm) out.push_back(v);
        return;
      }
      for (int x : values) {
        v[k] = x;
        rec(k + 1);
      }
    };
    rec(0);
  };
  visit({-4, -2, 0, 2, 4});
  visit({-3, -1, 1, 3});
  return out;
}

int doubled_norm(const std::array<int, 8>& v) {
  int s = 0;
  for (int x : v) s += x * x;
  return s;
}

// Brute-force box oracle: |x_i| <= sqrt(norm * Ginv_ii) bounds every
// coefficient of a vector of the given norm.
std::size_t box_count(const Lattice& l, long long norm) {
  RatMatrix ginv = *griess::num::inverse(l.gram());
  std::vector<long long> bound(l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i)
    bound[i] = static_cast<long long>(std::floor(std::sqrt(norm * ginv(i, i).to_double()) + 1e-9));
  std::vector<long long> x(l.rank());
  std::size_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == l.rank()) {
      Rational q;
      for (std::size_t i = 0; i < l.rank(); ++i)
        for (std::size_t j = 0; j < l.rank(); ++j) q += Rational(x[i] * x[j]) * l.gram()(i, j);
      if (q == Rational(norm)) ++count;
      return;
    }
    for (long long v = -bound[k]; v <= bound[k]; ++v) {
      x[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return count;
}

const E8Cube& cube() {
  static const E8Cube c = build_e8_cube();
  return c;
}

}  // namespace

TEST(Lattice, StandardConstructions) {
  Lattice a2 = build_standard("A2");
  EXPECT_EQ(a2.rank(), 2u);
  EXPECT_EQ(a2.det(), Rational(3));
  Lattice e8 = build_standard("E8");
  EXPECT_EQ(e8.rank(), 8u);
  EXPECT_EQ(e8.det(), Rational(1));
  EXPECT_TRUE(e8.is_even());
  Lattice s = build_standard("sqrt2E8");
  EXPECT_EQ(s.gram(), Rational(2) * e8.gram());
  EXPECT_EQ(build_standard("Z3").det(), Rational(1));
  EXPECT_THROW(build_standard("Q7"), std::invalid_argument);
  EXPECT_THROW(build_standard("A0"), std::invalid_argument);
}

TEST(Lattice, E8ModelMembership) {
  Lattice e8 = make_E8();
  for (const auto& v : e8_by_coordinates(2)) {
    AmbientVec w;
    for (int x : v) w.emplace_back(x, 2);
    EXPECT_TRUE(e8.contains(w));
  }
  AmbientVec odd(8);
  odd[0] = Rational(1);
  EXPECT_FALSE(e8.contains(odd));
}

TEST(Shell, E8CountsMatchCoordinateOracle) {
  auto oracle = e8_by_coordinates(4);
  std::size_t n2 = 0, n4 = 0;
  for (const auto& v : oracle) {
    n2 += doubled_norm(v) == 8;
    n4 += doubled_norm(v) == 16;
  }
  EXPECT_EQ(n2, 240u);
  EXPECT_EQ(n4, 2160u);
  Lattice e8 = make_E8();
  EXPECT_EQ(enumerate_shell(e8, 2).size(), n2);
  Shell s4 = enumerate_shell(e8, 4);
  EXPECT_EQ(s4.size(), n4);
  std::set<std::array<int, 8>> expect;
  for (const auto& v : oracle)
    if (doubled_norm(v) == 16) expect.insert(v);
  std::set<std::array<int, 8>> got;
  for (const auto& v : s4.vectors) {
    std::array<int, 8> d{};
    for (int k = 0; k < 8; ++k) d[k] = static_cast<int>((v[k] * Rational(2)).to_int64());
    got.insert(d);
  }
  EXPECT_EQ(got, expect);
}

TEST(Shell, SqrtTwoE8) {
  Lattice s = sqrt2_scale(make_E8());
  EXPECT_EQ(enumerate_shell(s, 2).size(), 0u);
  EXPECT_EQ(enumerate_shell(s, 4).size(), 240u);
}

TEST(Shell, RandomLatticesMatchBoxOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-2, 2);
  int tested = 0;
  while (tested < 12) {
    RatMatrix b(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 4; ++j) b(i, j) = Rational(d(rng));
    if (griess::num::rank(b) < 3) continue;
    Lattice l("rand", b);
    for (long long n : {1LL, 2LL, 3LL, 4LL, 6LL}) {
      Shell s = enumerate_shell(l, n);
      EXPECT_EQ(s.size(), box_count(l, n)) << "norm " << n;
      EXPECT_EQ(s.size() % 2, 0u);
      for (const auto& v : s.vectors) {
        EXPECT_EQ(norm(v), Rational(n));
        EXPECT_TRUE(l.contains(v));
        EXPECT_TRUE(std::binary_search(s.vectors.begin(), s.vectors.end(), neg(v)));
      }
      EXPECT_TRUE(std::is_sorted(s.vectors.begin(), s.vectors.end()));
    }
    ++tested;
  }
}

TEST(Shell, CacheRoundTrip) {
  auto dir = std::filesystem::temp_directory_path() / "griess_lab_shell_cache_test";
  std::filesystem::remove_all(dir);
  ShellCache cache(dir);
  Lattice e8 = make_E8();
  Shell cold = shell(e8, 2, &cache);
  ASSERT_TRUE(std::filesystem::exists(cache.path_for("E8", 2)));
  auto warm = cache.load("E8", 2);
  ASSERT_TRUE(warm.has_value());
  EXPECT_EQ(warm->vectors, cold.vectors);
  EXPECT_EQ(serialize_shell(*warm), serialize_shell(cold));
  EXPECT_EQ(serialize_shell(cold).substr(0, 30), "griess-lab-shell v1 E8 2 240\n-");
  auto entries = cache.list();
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].count, 240u);
  EXPECT_EQ(cache.clear(), 1u);
  EXPECT_FALSE(cache.load("E8", 2).has_value());
  EXPECT_FALSE(parse_shell("griess-lab-shell v1 E8 2 3\n1 0\n").has_value());
  std::filesystem::remove_all(dir);
}

TEST(Lattice, TensorProduct) {
  Lattice a2 = make_A(2), e8 = make_E8();
  Lattice z1 = make_Z(1);
  EXPECT_EQ(tensor_product(z1, a2).gram(), a2.gram());
  Lattice t = tensor_product(a2, e8);
  EXPECT_EQ(t.rank(), 16u);
  EXPECT_EQ(t.det(), a2.det().pow(8) * e8.det().pow(2));
  EXPECT_EQ(t.det(), Rational(6561));
  EXPECT_EQ(enumerate_shell(t, 2).size(), 0u);

  // Norm-4 vectors of {(x,y,z) in E8^3 : x+y+z = 0} counted from pairs of
  // short E8 vectors.
  std::vector<std::array<int, 8>> shortv;
  for (const auto& v : e8_by_coordinates(4)) shortv.push_back(v);
  std::size_t oracle = 0;
  for (const auto& x : shortv)
    for (const auto& y : shortv) {
      int total = doubled_norm(x) + doubled_norm(y);
      if (total > 16) continue;
      std::array<int, 8> z{};
      for (int k = 0; k < 8; ++k) z[k] = x[k] + y[k];
      if (total + doubled_norm(z) == 16) ++oracle;
    }
  EXPECT_EQ(oracle, 720u);
  EXPECT_EQ(enumerate_shell(t, 4).size(), oracle);
}

TEST(Lattice, DetMultiplicativityOnRandomPairs) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-3, 3);
  auto rand_lattice = [&](std::size_t r) {
    while (true) {
      RatMatrix b(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) b(i, j) = Rational(d(rng));
      if (!griess::num::determinant(b).is_zero()) return Lattice("r", b);
    }
  };
  for (int t = 0; t < 10; ++t) {
    Lattice a = rand_lattice(2), b = rand_lattice(3);
    Lattice ab = tensor_product(a, b);
    EXPECT_EQ(ab.det(), a.det().pow(3) * b.det().pow(2));
  }
}

TEST(Lattice, MPlusNIsTensorProduct) {
  const auto& c = cube();
  Lattice t = tensor_product(make_A(2), make_E8());
  // alpha_1 (x) e_i = (e_i, -e_i, 0) and alpha_2 (x) e_i = (0, e_i, -e_i).
  std::vector<AmbientVec> image;
  for (std::size_t i = 0; i < 8; ++i) image.push_back(c.M.basis_vector(i));
  for (std::size_t i = 0; i < 8; ++i) image.push_back(c.N.basis_vector(i));
  EXPECT_EQ(from_vectors("img", image).gram(), t.gram());
  EXPECT_EQ(c.MN.det(), t.det());
  for (std::size_t i = 0; i < t.rank(); ++i) EXPECT_TRUE(c.MN.contains(t.basis_vector(i)));
  EXPECT_TRUE(c.MN.contains(c.Nt.basis_vector(3)));
  // M + N = {(x,y,z) in E8^3 : x + y + z = 0}: same rank, and the defining
  // functional vanishes on a basis; equal determinants give equality.
  Lattice zero_sum = annihilator(c.L, c.E, "ZeroSum");
  EXPECT_EQ(zero_sum.det(), c.MN.det());
  for (std::size_t i = 0; i < c.MN.rank(); ++i) EXPECT_TRUE(zero_sum.contains(c.MN.basis_vector(i)));
}

TEST(Lattice, Annihilators) {
  const auto& c = cube();
  Lattice e = annihilator(c.L, c.MN);
  EXPECT_EQ(e.rank(), 8u);
  EXPECT_EQ(e.det(), Rational(3).pow(8));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_TRUE(e.contains(c.E.basis_vector(i)));
  EXPECT_EQ(e.det(), c.E.det());
  EXPECT_EQ(c.E.gram(), Rational(3) * c.e8.gram());
  EXPECT_EQ(annihilator(c.e8, c.e8).rank(), 0u);

  EmbeddingMaps maps(8, 2);
  Lattice a26 = make_A(26);
  Lattice y = maps.image_mu(make_A(2));
  Lattice ann = annihilator(a26, y);
  EXPECT_EQ(ann.rank(), 24u);
  EXPECT_EQ(ann.det(), make_A(8).det().pow(3));
}

TEST(Lattice, IntegerLeftKernel) {
  std::vector<std::vector<mpz_class>> a = {{2, 4}, {1, 2}, {3, 1}};
  auto ker = integer_left_kernel(a);
  ASSERT_EQ(ker.size(), 1u);
  for (std::size_t j = 0; j < 2; ++j) {
    mpz_class s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += ker[0][i] * a[i][j];
    EXPECT_EQ(s, 0);
  }
  EXPECT_EQ(abs(ker[0][0]) + abs(ker[0][1]) + abs(ker[0][2]), 3);
}

TEST(Sublattice, KIndexOneForZero) {
  auto k = sublattice_K(make_E8(), AmbientVec(8));
  EXPECT_EQ(k.index, 1);
  EXPECT_EQ(k.lattice.det(), Rational(1));
}

TEST(Sublattice, FindAGivesA8) {
  const auto& c = cube();
  auto k = sublattice_K(c.e8, c.a);
  EXPECT_EQ(k.index, 3);
  EXPECT_EQ(k.lattice.det(), Rational(9));
  Shell k2 = enumerate_shell(k.lattice, 2);
  EXPECT_EQ(k2.size(), 72u);
  EXPECT_EQ(k2.vectors, c.k_roots);
  auto info = root_system_type(k.lattice);
  EXPECT_EQ(info.label(), "A8");
  EXPECT_EQ(c.delta1.size(), 84u);
  EXPECT_EQ(c.delta2.size(), 84u);
  EXPECT_EQ(c.k_roots.size() + c.delta1.size() + c.delta2.size(), 240u);
  EXPECT_EQ(norm(c.a), Rational(8));
  // Three cosets: E8 = K u (b + K) u (-b + K).
  EXPECT_TRUE(pairwise_incongruent(k.lattice, {AmbientVec(8), c.b, neg(c.b)}));
  EXPECT_TRUE(k.lattice.contains(scale(Rational(3), c.b)));
}

TEST(RootSystem, Types) {
  EXPECT_EQ(root_system_type(make_A(2)).label(), "A2");
  EXPECT_EQ(root_system_type(make_E8()).label(), "E8");
  auto none = root_system_type(sqrt2_scale(make_E8()));
  EXPECT_FALSE(none.has_roots);
  EXPECT_EQ(none.label(), "no roots");
  Lattice a2a1 = direct_sum(make_A(2), make_A(1));
  EXPECT_EQ(root_system_type(a2a1).label(), "A1+A2");
  // D4 = {x in Z^4 : sum even}
  Lattice d4 = from_vectors("D4", {{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 1, 1}});
  EXPECT_EQ(root_system_type(d4).label(), "D4");
  EXPECT_EQ(root_system_type(make_Z(1)).label(), "no roots");
  // Z^2 has the four roots (+-1, +-1), spanning an index-2 sublattice.
  auto nz = root_system_type(make_Z(2));
  EXPECT_TRUE(nz.has_roots);
  EXPECT_FALSE(nz.spans);
  EXPECT_EQ(nz.label(), "not simply-laced root lattice");
}

TEST(Glue, Vectors) {
  EXPECT_EQ(glue_vector(8, 0), AmbientVec(9));
  AmbientVec g3 = glue_vector(8, 3);
  AmbientVec expect;
  for (int k = 0; k < 6; ++k) expect.emplace_back(1, 3);
  for (int k = 0; k < 3; ++k) expect.emplace_back(-2, 3);
  EXPECT_EQ(g3, expect);
  EXPECT_EQ(norm(g3), Rational(2));
  Lattice a8 = make_A(8);
  for (int i = 0; i <= 8; ++i)
    for (std::size_t r = 0; r < 8; ++r) EXPECT_TRUE(inner(glue_vector(8, i), a8.basis_vector(r)).is_integer());
  EXPECT_THROW(glue_vector(8, 9), std::out_of_range);
}

TEST(Glue, EmbeddingMaps) {
  EmbeddingMaps m22(2, 2);
  EXPECT_EQ(m22.image_mu(make_A(2)).gram(), Rational(3) * make_A(2).gram());
  EmbeddingMaps m82(8, 2);
  EXPECT_EQ(m82.image_d(make_A(8)).gram(), Rational(3) * make_A(8).gram());
  EXPECT_EQ(m82.image_mu(make_A(2)).gram(), Rational(9) * make_A(2).gram());
  Lattice e1 = m82.image_eta(1, make_A(8)), e2 = m82.image_eta(2, make_A(8));
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) EXPECT_TRUE(inner(e1.basis_vector(i), e2.basis_vector(j)).is_zero());
}

TEST(Glue, CosetsOfA26) {
  CosetSystem cs = coset_decomposition_A26();
  ASSERT_EQ(cs.representatives.size(), 81u);
  EXPECT_EQ(cs.representatives.front(), AmbientVec(27));
  EXPECT_EQ(cs.index, Rational(81));
  EXPECT_EQ(cs.sub.det(), Rational(243 * 729));
  EXPECT_EQ(cs.super.det(), Rational(27));
  EXPECT_TRUE(cs.all_in_super);
  EXPECT_TRUE(cs.pairwise_incongruent);
  // A duplicated coset is detected.
  auto reps = cs.representatives;
  reps.push_back(add(reps[5], cs.sub.basis_vector(0)));
  EXPECT_FALSE(pairwise_incongruent(cs.sub, reps));
}
