#include <gtest/gtest.h>

#include <random>
#include <algorithm>

#include "griess/fock/constructions.hpp"
#include "griess/lattice/glue.hpp"

using namespace griess::fock;
using namespace griess::lat;

namespace {

const AxisFamily& family() {
  static const AxisFamily f = build_axis_family(make_cube_context());
  return f;
}

const CubeContext& ctx() { return *family().ctx; }
const FockSpace& space() { return *ctx().space; }

FockState random_axis_combination(std::mt19937_64& rng, bool real) {
  std::uniform_int_distribution<int> d(-3, 3);
  FockState s(space());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Eisenstein c = real ? Eisenstein(d(rng)) : Eisenstein(Rational(d(rng)), Rational(d(rng)));
      s += c * family().at(i, j);
    }
  return s;
}

}  // namespace

TEST(FockConstructions, VirasoroOfSubspace) {
  std::vector<AmbientVec> frame;
  for (int k = 0; k < 24; ++k) {
    AmbientVec v(24);
    v[k] = Rational(1);
    frame.push_back(v);
  }
  FockState wl = virasoro_of_subspace(space(), frame);
  EXPECT_EQ(invariant_form(wl, wl), Eisenstein(12));
  EXPECT_EQ(griess_product(wl, wl), Rational(2) * wl);
  FockState wm = virasoro_of_subspace(space(), ctx().cube.M);
  EXPECT_EQ(invariant_form(wm, wm), Eisenstein(4));
  EXPECT_EQ(griess_product(wm, wm), Rational(2) * wm);
  FockState wn = virasoro_of_subspace(space(), ctx().cube.N);
  FockState wnt = virasoro_of_subspace(space(), ctx().cube.Nt);
  EXPECT_EQ(virasoro_of_subspace(space(), ctx().cube.MN), Rational(2, 3) * (wm + wn + wnt));
  // omega_L acts as 2 on weight 2
  const FockState& e = family().at(1, 2);
  EXPECT_EQ(griess_product(wl, e), Rational(2) * e);
}

TEST(FockConstructions, IsingVectors) {
  const auto& f = family();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const FockState& e = f.at(i, j);
      EXPECT_TRUE(e.is_homogeneous(2));
      EXPECT_EQ(griess_product(e, e), Rational(2) * e) << i << j;
      EXPECT_EQ(invariant_form(e, e), Eisenstein(Rational(1, 4)));
    }
  EXPECT_EQ(f.at(0, 1), ising_of_sqrt2E8(space(), ctx().cube.N));
  EXPECT_EQ(f.at(0, 2), ising_of_sqrt2E8(space(), ctx().cube.Nt));
  EXPECT_THROW(ising_of_sqrt2E8(space(), ctx().cube.e8.relabeled("E8")), std::invalid_argument);
  const FockState &em = f.at(0, 0), &en = f.at(0, 1), &ent = f.at(0, 2);
  EXPECT_EQ(griess_product(em, en), Rational(1, 32) * (em + en - ent));
  EXPECT_EQ(invariant_form(en, ent), Eisenstein(Rational(1, 256)));
}

TEST(FockConstructions, AxisGram) {
  const auto& f = family();
  for (int p = 0; p < 9; ++p)
    for (int q = p + 1; q < 9; ++q)
      EXPECT_EQ(invariant_form(f.at(p / 3, p % 3), f.at(q / 3, q % 3)), Eisenstein(Rational(1, 256))) << p << q;
}

TEST(FockConstructions, RhoAndTheta) {
  std::mt19937_64 rng(11);
  const AmbientVec& a = ctx().cube.a;
  for (int k = 0; k < 3; ++k) {
    FockState x = random_axis_combination(rng, false);
    FockState y = random_axis_combination(rng, false);
    EXPECT_EQ(rho_twist(a, 0, x), x);
    EXPECT_EQ(rho_twist(a, 1, rho_twist(a, 1, rho_twist(a, 1, x))), x);
    EXPECT_EQ(rho_twist(a, 1, griess_product(x, y)), griess_product(rho_twist(a, 1, x), rho_twist(a, 1, y)));
    EXPECT_EQ(invariant_form(rho_twist(a, 2, x), rho_twist(a, 2, y)), invariant_form(x, y));
    EXPECT_EQ(theta(theta(x)), x);
    FockState u = random_axis_combination(rng, true);
    FockState v = random_axis_combination(rng, true);
    EXPECT_EQ(theta(griess_product(u, v)), griess_product(theta(u), theta(v)));
    EXPECT_EQ(griess_product(x, y), griess_product(y, x));
    EXPECT_EQ(invariant_form(x, y), invariant_form(y, x));
  }
  EXPECT_EQ(theta(family().at(0, 0)), family().at(0, 0));
  // (1 + rho + rho^2) e_M = (3/16) omega_M + (3/32) sum over (alpha, -alpha, 0), alpha in K(2)
  FockState avg = family().at(0, 0) + family().at(1, 0) + family().at(2, 0);
  FockState expected = Rational(3, 16) * virasoro_of_subspace(space(), ctx().cube.M);
  for (const auto& al : ctx().cube.k_roots)
    expected += FockState::exponential(space(), block3(al, neg(al), AmbientVec(8)), Eisenstein(Rational(3, 32)));
  EXPECT_EQ(avg, expected);
}

TEST(FockConstructions, BlockPermutationIsAutomorphism) {
  std::mt19937_64 rng(12);
  FockState x = random_axis_combination(rng, false);
  FockState y = random_axis_combination(rng, false);
  EXPECT_EQ(permute_blocks(griess_product(x, y)), griess_product(permute_blocks(x), permute_blocks(y)));
  EXPECT_EQ(permute_blocks(permute_blocks(permute_blocks(x))), x);
}

TEST(FockConstructions, SugawaraElement) {
  FockState o1 = sugawara_omega(ctx());
  FockState o2 = sugawara_by_lattice(ctx());
  FockState o3 = sugawara_by_axes(family());
  EXPECT_EQ(o1, o2);
  EXPECT_EQ(o1, o3);
  EXPECT_EQ(griess_product(o1, o1), Rational(2) * o1);
  EXPECT_EQ(invariant_form(o1, o1), Eisenstein(10));
  for (std::size_t i = 0; i < ctx().cube.MN.rank(); ++i) {
    FockState h = FockState::oscillator(space(), ctx().cube.MN.basis_vector(i), 1);
    EXPECT_EQ(mode(o1, 1, h), Rational(3, 4) * h);
  }
}

TEST(FockConstructions, CommutantAnnihilation) {
  auto rep = check_commutant_annihilation(family());
  EXPECT_EQ(rep.checks, 4 * 72 * 9);
  EXPECT_TRUE(rep.ok());
  // roots outside K do not annihilate the twisted axes
  const AmbientVec& b = ctx().cube.b;
  EXPECT_TRUE(mode(e_alpha(ctx(), b), 1, family().at(0, 0)).is_zero());
  EXPECT_FALSE(mode(e_alpha(ctx(), b), 1, family().at(1, 0)).is_zero());
}

TEST(FockConstructions, RealForm) {
  RealForm rf = real_form_components(family());
  const FockState& em = family().at(0, 0);
  EXPECT_EQ(rf.x0 + rf.x1 + rf.x2, em);
  EXPECT_TRUE(rf.x0.all_rational());
  EXPECT_EQ(rf.x1, coset_sum(ctx(), 1));
  EXPECT_EQ(rf.x2, coset_sum(ctx(), -1));
  EXPECT_EQ(rf.x1.size(), 84u);
  EXPECT_EQ(theta(rf.x1), rf.x2);
  EXPECT_EQ(theta(rf.x0), rf.x0);
  EXPECT_EQ(theta(rf.x1 + rf.x2), rf.x1 + rf.x2);
  EXPECT_EQ(theta(rf.x1 - rf.x2), Rational(-1) * (rf.x1 - rf.x2));
  // rho e_M = X0 + zeta^2 X1 + zeta X2
  Eisenstein half_root = Rational(1, 2) * Eisenstein::sqrt_minus3();
  FockState minus = rf.x0 - Rational(1, 2) * (rf.x1 + rf.x2) - half_root * (rf.x1 - rf.x2);
  EXPECT_EQ(family().at(1, 0), minus);
  FockState plus = rf.x0 - Rational(1, 2) * (rf.x1 + rf.x2) + half_root * (rf.x1 - rf.x2);
  EXPECT_NE(family().at(1, 0), plus);
}

TEST(FockConstructions, Parafermion) {
  auto ps = make_parafermion_space();
  AmbientVec alpha{Rational(1), Rational(-1), Rational(0)};
  FockState w = parafermion_omega(*ps, alpha, -1);
  EXPECT_EQ(griess_product(w, w), Rational(2) * w);
  EXPECT_EQ(invariant_form(w, w), Eisenstein(Rational(8, 11)));
  EmbeddingMaps maps(8, 2);
  EXPECT_TRUE(heisenberg_mode(maps.mu(alpha), 1, w).is_zero());
  FockState printed = parafermion_omega(*ps, alpha, 1);
  EXPECT_NE(griess_product(printed, printed), Rational(2) * printed);
}

TEST(FockConstructions, DumpFormat) {
  FockState s = FockState::exponential(space(), block3(ctx().cube.b, neg(ctx().cube.b), AmbientVec(8)),
                                       Eisenstein(Rational(1, 2), Rational(-1, 3)));
  std::string d = s.dump();
  EXPECT_EQ(d.substr(0, d.find('\n')), "griess-lab-state v1 V_E8^3 24 1");
  std::string line = d.substr(d.find('\n') + 1);
  EXPECT_EQ(line.substr(0, 11), "1/2 -1/3 | ");
  EXPECT_EQ(std::count(d.begin(), d.end(), '\n'), 2);
}
