#include <gtest/gtest.h>

#include <random>

#include "griess/fock/modes.hpp"
#include "griess/lattice/shell.hpp"

using namespace griess::fock;
using namespace griess::lat;

namespace {

const FockSpace& e8_space() {
  static const FockSpace s(make_E8(), "E8");
  return s;
}

const std::vector<AmbientVec>& e8_roots() {
  static const auto r = enumerate_shell(make_E8(), 2).vectors;
  return r;
}

const std::vector<AmbientVec>& e8_norm4() {
  static const auto r = enumerate_shell(make_E8(), 4).vectors;
  return r;
}

AmbientVec random_direction(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  AmbientVec h(8);
  for (auto& x : h) x = Rational(d(rng), 2);
  return h;
}

const AmbientVec& pick(const std::vector<AmbientVec>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

FockState random_weight1(std::mt19937_64& rng) {
  const auto& sp = e8_space();
  FockState s = FockState::oscillator(sp, random_direction(rng), 1);
  s += FockState::exponential(sp, pick(e8_roots(), rng), Eisenstein(Rational(2), Rational(-1)));
  s += FockState::exponential(sp, pick(e8_roots(), rng), Eisenstein(3));
  return s;
}

FockState random_weight2(std::mt19937_64& rng) {
  const auto& sp = e8_space();
  FockState s = FockState::oscillator(sp, random_direction(rng), 2);
  s += heisenberg_mode(random_direction(rng), -1, FockState::oscillator(sp, random_direction(rng), 1));
  s += FockState::exponential(sp, pick(e8_norm4(), rng), Eisenstein(Rational(-1, 3)));
  s += heisenberg_mode(random_direction(rng), -1, FockState::exponential(sp, pick(e8_roots(), rng)));
  return s;
}

Rational factorial(int j) {
  Rational f(1);
  for (int i = 2; i <= j; ++i) f *= Rational(i);
  return f;
}

// sum_j (-1)^{n+j+1} L(-1)^j / j! (v_{n+j} u)
FockState skew(const FockState& u, int n, const FockState& v, int max_j) {
  FockState out(u.space());
  for (int j = 0; j <= max_j; ++j) {
    FockState t = mode(v, n + j, u);
    for (int k = 0; k < j; ++k) t = l_minus_one(t);
    Rational s = ((n + j + 1) % 2 == 0) ? Rational(1) : Rational(-1);
    out += (s / factorial(j)) * t;
  }
  return out;
}

}  // namespace

TEST(FockEngine, VacuumIsIdentity) {
  std::mt19937_64 rng(1);
  const auto& sp = e8_space();
  for (int k = 0; k < 5; ++k) {
    FockState v = random_weight2(rng);
    EXPECT_EQ(mode(FockState::vacuum(sp), -1, v), v);
    EXPECT_TRUE(mode(FockState::vacuum(sp), 0, v).is_zero());
  }
}

TEST(FockEngine, CreationProperty) {
  std::mt19937_64 rng(2);
  const auto& sp = e8_space();
  for (int k = 0; k < 5; ++k) {
    FockState u1 = random_weight1(rng), u2 = random_weight2(rng);
    EXPECT_EQ(mode(u1, -1, FockState::vacuum(sp)), u1);
    EXPECT_EQ(mode(u2, -1, FockState::vacuum(sp)), u2);
    EXPECT_TRUE(mode(u2, 0, FockState::vacuum(sp)).is_zero());
    EXPECT_EQ(mode(u1, -2, FockState::vacuum(sp)), l_minus_one(u1));
  }
}

TEST(FockEngine, HeisenbergFieldMatchesDirectAction) {
  std::mt19937_64 rng(3);
  const auto& sp = e8_space();
  for (int k = 0; k < 5; ++k) {
    AmbientVec h = random_direction(rng);
    FockState hs = FockState::oscillator(sp, h, 1);
    FockState v1 = random_weight1(rng), v2 = random_weight2(rng);
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(mode(hs, n, v2), heisenberg_mode(h, n, v2)) << n;
    EXPECT_EQ(mode(hs, -1, v1), heisenberg_mode(h, -1, v1));
    EXPECT_EQ(mode(hs, 0, v1), heisenberg_mode(h, 0, v1));
  }
}

TEST(FockEngine, ExponentialProducts) {
  const auto& sp = e8_space();
  const AmbientVec& b = e8_roots()[17];
  FockState e = FockState::exponential(sp, b);
  FockState f = FockState::exponential(sp, neg(b));
  FockState b1 = FockState::oscillator(sp, b, 1);
  FockState b2 = FockState::oscillator(sp, b, 2);
  EXPECT_EQ(mode(e, 1, f), Rational(-1) * FockState::vacuum(sp));
  EXPECT_EQ(mode(e, 0, f), Rational(-1) * b1);
  FockState s2 = Rational(1, 2) * (heisenberg_mode(b, -1, b1) + b2);
  EXPECT_EQ(mode(e, -1, f), Rational(-1) * s2);
  EXPECT_TRUE(mode(e, 2, f).is_zero());
  EXPECT_THROW(mode(e, -2, f), std::domain_error);
}

TEST(FockEngine, ClosedFormAgreesWithGeneric) {
  const auto& sp = e8_space();
  std::mt19937_64 rng(4);
  ModeOptions generic{false};
  FockState u(sp), v(sp);
  for (int k = 0; k < 30; ++k) {
    u += FockState::exponential(sp, pick(e8_roots(), rng), Eisenstein(k + 1));
    v += FockState::exponential(sp, pick(e8_roots(), rng), Eisenstein(Rational(1), Rational(k)));
  }
  for (int n = -1; n <= 3; ++n) EXPECT_EQ(mode(u, n, v), mode(u, n, v, generic)) << n;
}

TEST(FockEngine, SkewSymmetry) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 4; ++k) {
    FockState u1 = random_weight1(rng), u2 = random_weight2(rng);
    FockState v1 = random_weight1(rng), v2 = random_weight2(rng);
    for (int n = 1; n <= 3; ++n) EXPECT_EQ(mode(u2, n, v2), skew(u2, n, v2, 3 - n)) << n;
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(mode(u1, n, v2), skew(u1, n, v2, 2 - n)) << n;
    for (int n = -1; n <= 1; ++n) EXPECT_EQ(mode(u1, n, v1), skew(u1, n, v1, 1 - n)) << n;
  }
}

TEST(FockEngine, CommutatorWithHeisenberg) {
  // [h(m), (e^b)_n] = <h,b> (e^b)_{m+n}
  std::mt19937_64 rng(6);
  for (int k = 0; k < 6; ++k) {
    AmbientVec h = random_direction(rng);
    const AmbientVec& b = pick(e8_roots(), rng);
    FockState v = random_weight1(rng);
    for (int m = 0; m <= 1; ++m)
      for (int n = 0; n <= 1; ++n) {
        FockState lhs = heisenberg_mode(h, m, exp_mode(b, n, v)) - exp_mode(b, n, heisenberg_mode(h, m, v));
        EXPECT_EQ(lhs, inner(h, b) * exp_mode(b, m + n, v));
      }
  }
}

TEST(FockEngine, InvariantFormOnHeisenbergStates) {
  const auto& sp = e8_space();
  std::mt19937_64 rng(7);
  for (int k = 0; k < 5; ++k) {
    AmbientVec g = random_direction(rng), h = random_direction(rng);
    FockState a = FockState::oscillator(sp, g, 2);
    FockState b = FockState::oscillator(sp, h, 2);
    // (g(-2)1)_3 = -3 g(2)
    EXPECT_EQ(invariant_form(a, b), Eisenstein(Rational(-6) * inner(g, h)));
    FockState c = heisenberg_mode(g, -1, FockState::oscillator(sp, h, 1));
    EXPECT_EQ(invariant_form(c, c), Eisenstein(norm(g) * norm(h) + inner(g, h) * inner(g, h)));
  }
  EXPECT_THROW(invariant_form(FockState::oscillator(sp, AmbientVec(8, Rational(1)), 1),
                              FockState::oscillator(sp, AmbientVec(8, Rational(1)), 1)),
               std::invalid_argument);
}
