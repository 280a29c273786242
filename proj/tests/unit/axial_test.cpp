#include <gtest/gtest.h>

#include <set>

#include "griess/axial/algebra.hpp"

using namespace griess::axial;

namespace {

Vec vec(std::initializer_list<Rational> xs) { return Vec(xs); }

Vec axis(int i, int j) {
  Vec v(9);
  v[g9_index(i, j)] = Rational(1);
  return v;
}

// Index of the basis vector equal to v, or -1.
int as_axis(const Vec& v) {
  int hit = -1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (v[i] != Rational(1) || hit >= 0) return -1;
    hit = static_cast<int>(i);
  }
  return hit;
}

// Closure of permutations of {0..8} under composition.
std::size_t permutation_group_order(const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> seen;
  std::vector<int> id(9);
  for (int i = 0; i < 9; ++i) id[i] = i;
  std::vector<std::vector<int>> todo{id};
  seen.insert(id);
  while (!todo.empty()) {
    auto p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      std::vector<int> q(9);
      for (int i = 0; i < 9; ++i) q[i] = g[p[i]];
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return seen.size();
}

}  // namespace

TEST(Axial, ThreeC) {
  auto a = build_3C();
  EXPECT_TRUE(a.is_commutative());
  EXPECT_TRUE(a.is_form_associative());
  Vec w = scale(Rational(32, 33), vec({1, 1, 1}));
  EXPECT_EQ(certify_virasoro(a, w), Rational(16, 11));
  // (32/33)^2 (3/4 + 6/256)
  EXPECT_EQ(a.form(w, w), Rational(32 * 32, 33 * 33) * (Rational(3, 4) + Rational(6, 256)));
  Vec x = sub(w, a.basis(0));
  EXPECT_EQ(certify_virasoro(a, x), Rational(21, 22));
  EXPECT_EQ(a.form(x, x), Rational(21, 44));
  EXPECT_TRUE(is_zero(a.product(a.basis(0), x)));
  EXPECT_EQ(certify_virasoro(a, a.basis(0)), Rational(1, 2));
  EXPECT_FALSE(certify_virasoro(a, vec({1, 1, 1})).has_value());
  // e1 - e2 is a 1/16-eigenvector of e0
  EXPECT_EQ(a.product(a.basis(0), vec({0, 1, -1})), vec({0, Rational(1, 16), Rational(-1, 16)}));
  auto tau = miyamoto_tau(a, a.basis(0));
  EXPECT_TRUE(tau.automorphism);
  EXPECT_EQ(tau.apply(a.basis(1)), a.basis(2));
  EXPECT_TRUE(miyamoto_sigma(a, a.basis(0)).is_identity());
}

TEST(Axial, NineDimensional) {
  auto g = build_G9();
  EXPECT_TRUE(g.is_commutative());
  EXPECT_TRUE(g.is_form_associative());
  EXPECT_EQ(griess::num::rank(g.gram), 9u);
  EXPECT_EQ(griess::num::determinant(g.gram), Rational(9, 32) * Rational(63, 256).pow(8));
  auto el = g9_elements();
  EXPECT_EQ(certify_virasoro(g, el.omega), Rational(4));
  EXPECT_EQ(adjoint(g, scale(Rational(1, 2), el.omega)), RatMatrix::identity(9));
  auto spectrum = eigen_dimensions(g, axis(0, 0), {Rational(2), Rational(0), Rational(1, 2), Rational(1, 16)});
  EXPECT_EQ(spectrum[Rational(2)], 1u);
  EXPECT_EQ(spectrum[Rational(0)], 4u);
  EXPECT_EQ(spectrum[Rational(1, 2)], 0u);
  EXPECT_EQ(spectrum[Rational(1, 16)], 4u);
  for (int p = 0; p < 9; ++p) EXPECT_TRUE(certify_axis(g, g.basis(p)).ok());
}

TEST(Axial, AVectors) {
  auto g = build_G9();
  auto el = g9_elements();
  for (int i = 0; i < 4; ++i) EXPECT_EQ(certify_virasoro(g, el.a[i]), Rational(21, 22));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> rest;
      for (int k = 0; k < 4; ++k)
        if (k != i && k != j) rest.push_back(k);
      Vec rhs = scale(Rational(1, 33), sub(sub(add(scale(Rational(2), el.a[i]), scale(Rational(2), el.a[j])), el.a[rest[0]]),
                                          el.a[rest[1]]));
      EXPECT_EQ(g.product(el.a[i], el.a[j]), rhs) << i << j;
    }
}

TEST(Axial, Frame) {
  auto g = build_G9();
  auto el = g9_elements();
  Vec e = axis(0, 0);
  EXPECT_EQ(add(add(e, el.a[0]), el.b1), el.omega);
  EXPECT_TRUE(is_zero(g.product(e, el.a[0])));
  EXPECT_TRUE(is_zero(g.product(e, el.b1)));
  EXPECT_TRUE(is_zero(g.product(el.a[0], el.b1)));
  EXPECT_EQ(certify_virasoro(g, e), Rational(1, 2));
  EXPECT_EQ(certify_virasoro(g, el.b1), Rational(28, 11));
}

TEST(Axial, HighestWeights) {
  auto g = build_G9();
  auto el = g9_elements();
  std::vector<Vec> frame{axis(0, 0), el.a[0], el.b1};
  auto check = [&](const Vec& v) { return highest_weight_check(g, v, frame); };
  using W = std::vector<Rational>;
  EXPECT_EQ(check(sub(el.a[1], el.a[2])), (W{0, Rational(1, 11), Rational(21, 11)}));
  EXPECT_EQ(check(sub(axis(0, 1), axis(0, 2))), (W{Rational(1, 16), Rational(31, 16), 0}));
  Vec r1 = add(add(axis(1, 0), axis(1, 1)), axis(1, 2));
  Vec r2 = add(add(axis(2, 0), axis(2, 1)), axis(2, 2));
  EXPECT_EQ(check(sub(r1, r2)), (W{Rational(1, 16), Rational(21, 176), Rational(20, 11)}));
  Vec v = sub(sub(axis(1, 1), axis(2, 2)), sub(axis(1, 2), axis(2, 1)));
  EXPECT_EQ(check(v), (W{Rational(1, 16), Rational(5, 176), Rational(21, 11)}));
  EXPECT_EQ(check(scale(Rational(-7, 3), v)), check(v));
  EXPECT_FALSE(check(axis(1, 1)).has_value());
}

TEST(Axial, MiyamotoGroup) {
  auto g = build_G9();
  std::vector<LinearEndo> all;
  std::vector<std::vector<int>> perms;
  for (int p = 0; p < 9; ++p) {
    auto t = miyamoto_tau(g, g.basis(p));
    EXPECT_TRUE(t.automorphism);
    EXPECT_EQ(t.matrix * t.matrix, RatMatrix::identity(9));
    std::vector<int> perm(9);
    for (int q = 0; q < 9; ++q) {
      perm[q] = as_axis(t.apply(g.basis(q)));
      EXPECT_GE(perm[q], 0);
    }
    perms.push_back(perm);
    all.push_back(t);
    EXPECT_TRUE(miyamoto_sigma(g, g.basis(p)).is_identity());
    EXPECT_TRUE(miyamoto_sigma(g, g.basis(p)).automorphism);
  }
  EXPECT_EQ(all[g9_index(0, 0)].apply(axis(1, 1)), axis(2, 2));
  EXPECT_EQ(all[g9_index(0, 0)].apply(axis(0, 0)), axis(0, 0));
  auto three = group_closure({all[g9_index(0, 0)], all[g9_index(0, 1)], all[g9_index(1, 0)]});
  auto nine = group_closure(all);
  EXPECT_EQ(three.order(), 18u);
  EXPECT_EQ(permutation_group_order(perms), 18u);
  EXPECT_EQ(nine.order(), 18u);
  for (const auto& m : nine.elements) EXPECT_LT(three.index_of(m), three.order());
  auto shape = analyse_shape(three);
  EXPECT_EQ(shape.involutions, 9u);
  EXPECT_TRUE(shape.involutions_conjugate);
  EXPECT_EQ(shape.o3_order, 9u);
  EXPECT_TRUE(shape.o3_normal);
  EXPECT_TRUE(shape.is_3squared_2());
  RatMatrix gm = all[g9_index(0, 0)].matrix * all[g9_index(1, 0)].matrix;
  RatMatrix hm = all[g9_index(0, 0)].matrix * all[g9_index(0, 1)].matrix;
  EXPECT_EQ(gm * hm, hm * gm);
  EXPECT_EQ(three.element_order(three.index_of(gm)), 3u);
  EXPECT_EQ(three.element_order(three.index_of(hm)), 3u);
  EXPECT_THROW(group_closure(all, 5), std::length_error);
}

TEST(Axial, CentralCharges) {
  EXPECT_EQ(affine_central_charge(lie_type("sl9"), 3), Rational(20));
  EXPECT_EQ(affine_central_charge(lie_type("sl3"), 9), Rational(6));
  EXPECT_EQ(parafermion_central_charge(lie_type("sl3"), 9), Rational(4));
  EXPECT_EQ(Rational(24) - affine_central_charge(lie_type("E8"), 3), Rational(16, 11));
  EXPECT_EQ(parafermion_central_charge(lie_type("sl2"), 9), Rational(16, 11));
  EXPECT_THROW(lie_type("G2"), std::invalid_argument);
}

TEST(Axial, Isomorphism) {
  auto g = build_G9();
  std::vector<std::size_t> id{0, 1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_TRUE(isomorphism_check(g, g, id));
  std::vector<std::size_t> swap{0, 2, 1, 3, 4, 5, 6, 7, 8};
  EXPECT_FALSE(isomorphism_check(g, g, swap));
  // transposition of the index pair (i, j) -> (j, i) is a symmetry
  std::vector<std::size_t> tr(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) tr[g9_index(i, j)] = g9_index(j, i);
  EXPECT_TRUE(isomorphism_check(g, g, tr));
  EXPECT_THROW(isomorphism_check(g, build_3C(), id), std::invalid_argument);
}

TEST(Axial, TextRoundTrip) {
  auto g = build_G9();
  auto parsed = parse_algebra(serialize_algebra(g));
  ASSERT_TRUE(parsed.has_value());
  EXPECT_EQ(parsed->labels, g.labels);
  EXPECT_TRUE(isomorphism_check(g, *parsed, {0, 1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_FALSE(parse_algebra("griess-lab-alg v2 3\n").has_value());
  EXPECT_FALSE(parse_algebra("griess-lab-alg v1 2\n0 0 5 1\n").has_value());
}
