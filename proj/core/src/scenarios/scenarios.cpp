#include "griess/scenarios/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "griess/axial/algebra.hpp"
#include "griess/cocycle/cocycle.hpp"
#include "griess/fock/constructions.hpp"
#include "griess/lattice/glue.hpp"
#include "griess/version.hpp"

namespace griess::scenarios {

namespace {

using axial::StructureAlgebra;
using fock::AxisFamily;
using fock::CubeContext;
using fock::FockSpace;
using fock::FockState;
using lat::AmbientVec;
using num::Eisenstein;
using num::RatMatrix;
using num::Rational;
using Clock = std::chrono::steady_clock;

std::string str(bool b) { return b ? "true" : "false"; }
std::string str(const Rational& q) { return q.to_string(); }
std::string str(const Eisenstein& x) { return x.to_string(); }
std::string str(std::size_t n) { return std::to_string(n); }
std::string str(long n) { return std::to_string(n); }

std::string ratio(std::size_t hits, std::size_t total) { return std::to_string(hits) + "/" + std::to_string(total); }

std::string join(const std::vector<Rational>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
  return out + ")";
}

class Recorder {
 public:
  explicit Recorder(bool timings) : timings_(timings), last_(Clock::now()) {}

  void check(std::string id, std::string computed, std::string expected, const char* provenance, std::string quote) {
    auto now = Clock::now();
    CheckResult r;
    r.id = std::move(id);
    r.pass = computed == expected;
    r.computed = std::move(computed);
    r.expected = std::move(expected);
    r.provenance = provenance;
    r.quote = std::move(quote);
    if (timings_) r.elapsed_ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    results.push_back(std::move(r));
  }

  std::vector<CheckResult> results;

 private:
  bool timings_;
  Clock::time_point last_;
};

// Lazily built objects shared by all groups of one run.
class Shared {
 public:
  explicit Shared(const RunOptions& opts) : opts_(opts), cache_(opts.cache_dir) {}

  const RunOptions& opts() const { return opts_; }
  const lat::ShellCache* cache() const { return cache_.enabled() ? &cache_ : nullptr; }

  std::shared_ptr<const CubeContext> cube() {
    std::call_once(cube_once_, [&] { cube_ = fock::make_cube_context(cache()); });
    return cube_;
  }
  const AxisFamily& family() {
    std::call_once(family_once_, [&] { family_ = std::make_unique<AxisFamily>(fock::build_axis_family(cube())); });
    return *family_;
  }

 private:
  RunOptions opts_;
  lat::ShellCache cache_;
  std::once_flag cube_once_, family_once_;
  std::shared_ptr<const CubeContext> cube_;
  std::unique_ptr<AxisFamily> family_;
};

// ---- lattice -----------------------------------------------------------------

void lattice_checks(Shared& sh, Recorder& rec) {
  const auto& cube = sh.cube()->cube;
  const lat::ShellCache* cache = sh.cache();
  rec.check("lattice.e8-rank-det", str(cube.e8.rank()) + " " + str(cube.e8.det()), "8 1", "derived",
            "E8 in the even coordinate model is unimodular of rank 8");
  rec.check("lattice.e8-even", str(cube.e8.is_even()), "true", "derived", "E8 is even");
  rec.check("lattice.e8-shell-2", str(lat::shell(cube.e8, 2, cache).size()), "240", "stated", "E8 has 240 roots");
  rec.check("lattice.e8-shell-4", str(lat::shell(cube.e8, 4, cache).size()), "2160", "derived",
            "E8 has 2160 vectors of norm 4");
  rec.check("lattice.find-a-norm", str(lat::norm(cube.a)), "8", "derived",
            "the first vector a cutting out 72 roots lies in the norm-8 shell");
  auto k_info = lat::root_system_type_from_roots(cube.K, cube.k_roots);
  rec.check("lattice.k-root-count", str(cube.k_roots.size()), "72", "stated",
            "roots of E8 pairing with a into 3Z number 72");
  rec.check("lattice.k-type", k_info.label(), "A8", "stated", "those roots form a root system of type A8 spanning K");
  rec.check("lattice.k-index", str(cube.K.det()), "9", "derived", "K has index 3 in E8");
  rec.check("lattice.delta-sizes", str(cube.delta1.size()) + " " + str(cube.delta2.size()), "84 84", "stated",
            "the remaining roots split 84 + 84 by <beta, a> mod 3");

  lat::Lattice a2e8 = lat::tensor_product(lat::make_A(2), cube.e8, "A2xE8");
  bool same = true;
  for (std::size_t i = 0; i < a2e8.rank(); ++i) same = same && cube.MN.contains(a2e8.basis_vector(i));
  for (std::size_t i = 0; i < cube.MN.rank(); ++i) same = same && a2e8.contains(cube.MN.basis_vector(i));
  rec.check("lattice.mn-is-a2-tensor-e8", str(same), "true", "stated", "M + N equals A2 tensor E8");
  rec.check("lattice.mn-shell-4", str(lat::shell(cube.MN, 4, cache).size()), "720", "derived",
            "the norm-4 vectors of M + N are exactly those of M, N and Nt");
  std::size_t sqrt2_shell = lat::shell(cube.M, 4, cache).size();
  rec.check("lattice.m-sqrt2e8", str(cube.M.det()) + " " + str(sqrt2_shell), "256 240", "definition",
            "M is isometric to sqrt2 E8");

  auto cs = lat::coset_decomposition_A26();
  rec.check("lattice.a26-coset-index", str(cs.index), "81", "stated",
            "A26 contains mu(A2) + A8^3 with index 81");
  rec.check("lattice.a26-coset-representatives",
            str(cs.representatives.size()) + " " + str(cs.pairwise_incongruent) + " " + str(cs.all_in_super),
            "81 true true", "stated", "the 81 listed representatives lie in A26 and are pairwise distinct modulo the sublattice");
  lat::EmbeddingMaps maps(8, 2);
  lat::Lattice ann = lat::annihilator(cs.super, maps.image_mu(lat::make_A(2)));
  rec.check("lattice.a26-annihilator", str(ann.rank()) + " " + str(ann.det()), "24 729", "derived",
            "the annihilator of mu(A2) in A26 is A8^3");
}

// ---- cocycle -----------------------------------------------------------------

void cocycle_checks(Shared& sh, Recorder& rec) {
  const auto& cube = sh.cube()->cube;
  auto eps = cocycle::CocycleTable::build_epsilon0(cube.L);
  std::mt19937_64 rng(sh.opts().seed);
  std::uniform_int_distribution<int> d(-3, 3);
  auto random_vector = [&] {
    num::Vec<Rational> x(cube.L.rank());
    for (auto& c : x) c = Rational(d(rng));
    return cube.L.from_coordinates(x);
  };
  auto mod2 = [](const Rational& q) {
    mpz_class n = q.numerator();
    return mpz_odd_p(n.get_mpz_t()) ? 1 : 0;
  };
  std::size_t self = 0, skew = 0, bilinear = 0;
  const std::size_t samples = 1000;
  for (std::size_t s = 0; s < samples; ++s) {
    AmbientVec a = random_vector(), b = random_vector(), c = random_vector();
    if (eps.epsilon(a, a) == mod2(lat::norm(a) / Rational(2))) ++self;
    if ((eps.epsilon(a, b) + eps.epsilon(b, a)) % 2 == mod2(lat::inner(a, b))) ++skew;
    if (eps.epsilon(lat::add(a, c), b) == (eps.epsilon(a, b) + eps.epsilon(c, b)) % 2 &&
        eps.epsilon(a, lat::add(b, c)) == (eps.epsilon(a, b) + eps.epsilon(a, c)) % 2)
      ++bilinear;
  }
  rec.check("cocycle.self-pairing", ratio(self, samples), ratio(samples, samples), "stated",
            "eps(a, a) is half the norm of a mod 2 on random pairs");
  rec.check("cocycle.commutator", ratio(skew, samples), ratio(samples, samples), "stated",
            "eps(a, b) + eps(b, a) is <a, b> mod 2 on random pairs");
  rec.check("cocycle.bilinear", ratio(bilinear, samples), ratio(samples, samples), "stated",
            "eps is bilinear mod 2 on random triples");
  rec.check("cocycle.trivial-on-diagonals",
            str(eps.is_trivial_on(cube.M)) + " " + str(eps.is_trivial_on(cube.N)) + " " + str(eps.is_trivial_on(cube.Nt)),
            "true true true", "stated", "eps vanishes on M, N and Nt");

  FockSpace e8_space(cube.e8, "V_E8");
  FockState minus_vac = Rational(-1) * FockState::vacuum(e8_space);
  std::size_t inverse_ok = 0;
  for (const auto& al : cube.roots) {
    FockState p = fock::mode(FockState::exponential(e8_space, al), 1, FockState::exponential(e8_space, lat::neg(al)));
    if (p == minus_vac) ++inverse_ok;
  }
  rec.check("cocycle.root-inverse", ratio(inverse_ok, cube.roots.size()), "240/240", "stated",
            "e^alpha e^{-alpha} = -e^0 for every root alpha");
  auto eps8 = cocycle::CocycleTable::build_epsilon0(cube.e8);
  auto four = lat::shell(cube.e8, 4, sh.cache());
  std::size_t even = 0;
  for (const auto& v : four.vectors)
    if (eps8.epsilon(v, lat::neg(v)) == 0) ++even;
  rec.check("cocycle.norm4-inverse", ratio(even, four.size()), "2160/2160", "derived",
            "e^beta e^{-beta} = +e^0 for every norm-4 vector beta");
}

// ---- fock axes ---------------------------------------------------------------

void fock_axis_checks(Shared& sh, Recorder& rec) {
  const AxisFamily& f = sh.family();
  const auto& ctx = *f.ctx;
  const FockSpace& sp = *ctx.space;
  std::vector<AmbientVec> frame;
  for (int k = 0; k < 24; ++k) {
    AmbientVec v(24);
    v[k] = Rational(1);
    frame.push_back(v);
  }
  FockState wl = fock::virasoro_of_subspace(sp, frame);
  rec.check("fock.omega-L", str(fock::griess_product(wl, wl) == Rational(2) * wl) + " " + str(fock::invariant_form(wl, wl)),
            "true 12", "derived", "the conformal vector of the rank-24 lattice VOA has c = 24");
  FockState wm = fock::virasoro_of_subspace(sp, ctx.cube.M);
  rec.check("fock.omega-M", str(fock::griess_product(wm, wm) == Rational(2) * wm) + " " + str(fock::invariant_form(wm, wm)),
            "true 4", "derived", "the conformal vector of the Heisenberg VOA on M has c = 8");
  FockState wn = fock::virasoro_of_subspace(sp, ctx.cube.N);
  FockState wnt = fock::virasoro_of_subspace(sp, ctx.cube.Nt);
  rec.check("fock.omega-MN-split", str(fock::virasoro_of_subspace(sp, ctx.cube.MN) == Rational(2, 3) * (wm + wn + wnt)), "true",
            "derived", "omega of M + N is 2/3 of the sum over M, N and Nt");

  std::size_t idem = 0, norm = 0, weight = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const FockState& e = f.at(i, j);
      if (e.is_homogeneous(2)) ++weight;
      if (fock::griess_product(e, e) == Rational(2) * e) ++idem;
      if (fock::invariant_form(e, e) == Eisenstein(Rational(1, 4))) ++norm;
    }
  rec.check("fock.axes-weight-2", ratio(weight, 9), "9/9", "definition", "every e^{i,j} is homogeneous of weight 2");
  rec.check("fock.axes-idempotent", ratio(idem, 9), "9/9", "stated", "e^{i,j} . e^{i,j} = 2 e^{i,j}");
  rec.check("fock.axes-norm", ratio(norm, 9), "9/9", "stated", "<e^{i,j}, e^{i,j}> = 1/4");
  std::size_t cross = 0, pairs = 0;
  for (int p = 0; p < 9; ++p)
    for (int q = p + 1; q < 9; ++q, ++pairs)
      if (fock::invariant_form(f.at(p / 3, p % 3), f.at(q / 3, q % 3)) == Eisenstein(Rational(1, 256))) ++cross;
  rec.check("fock.axes-cross-pairings", ratio(cross, pairs), "36/36", "stated",
            "distinct axes pair to 1/256");
  const FockState &em = f.at(0, 0), &en = f.at(0, 1), &ent = f.at(0, 2);
  rec.check("fock.eM-eN-product", str(fock::griess_product(em, en) == Rational(1, 32) * (em + en - ent)), "true", "stated",
            "e_M . e_N = 1/32 (e_M + e_N - e_Nt)");
  rec.check("fock.eN-from-lattice",
            str(en == fock::ising_of_sqrt2E8(sp, ctx.cube.N, ctx.cache)) + " " +
                str(ent == fock::ising_of_sqrt2E8(sp, ctx.cube.Nt, ctx.cache)),
            "true true", "definition", "rotating e_M by the block cycle gives the Ising vectors of N and Nt");
  rec.check("fock.theta-fixes-eM", str(fock::theta(em) == em), "true", "derived", "theta fixes e_M");

  FockState avg = f.at(0, 0) + f.at(1, 0) + f.at(2, 0);
  FockState expected = Rational(3, 16) * wm;
  for (const auto& al : ctx.cube.k_roots)
    expected += FockState::exponential(sp, lat::block3(al, lat::neg(al), AmbientVec(8)), Eisenstein(Rational(3, 32)));
  rec.check("fock.rho-orbit-average", str(avg == expected), "true", "derived",
            "the rho-orbit sum of e_M keeps only the exponentials from K(2)");
  const AmbientVec& a = ctx.cube.a;
  rec.check("fock.rho-order-3", str(fock::rho_twist(a, 1, f.at(2, 0)) == em), "true", "definition", "rho has order 3 on e_M");

  std::mt19937_64 rng(sh.opts().seed);
  std::uniform_int_distribution<int> d(-3, 3);
  auto combo = [&] {
    FockState s(sp);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += Eisenstein(Rational(d(rng)), Rational(d(rng))) * f.at(i, j);
    return s;
  };
  std::size_t ok = 0;
  const std::size_t samples = 3;
  for (std::size_t s = 0; s < samples; ++s) {
    FockState x = combo(), y = combo(), z = combo();
    FockState xy = fock::griess_product(x, y);
    bool good = xy == fock::griess_product(y, x);
    good = good && fock::invariant_form(xy, z) == fock::invariant_form(x, fock::griess_product(y, z));
    good = good && fock::rho_twist(a, 1, xy) == fock::griess_product(fock::rho_twist(a, 1, x), fock::rho_twist(a, 1, y));
    good = good && fock::permute_blocks(xy) == fock::griess_product(fock::permute_blocks(x), fock::permute_blocks(y));
    if (good) ++ok;
  }
  rec.check("fock.axis-span-properties", ratio(ok, samples), ratio(samples, samples), "derived",
            "on random combinations of axes the product is commutative, the form associative, and rho and the block cycle are automorphisms");
}

// ---- cross validation --------------------------------------------------------

struct Extracted {
  StructureAlgebra alg;
  std::string mismatch;  // empty when every product lies in the span with rational coefficients
};

Extracted extract_algebra(const std::vector<FockState>& axes, const std::vector<std::string>& labels) {
  const std::size_t n = axes.size();
  Extracted out{StructureAlgebra(n, labels), {}};
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto c = fock::express_in_span(axes, fock::griess_product(axes[p], axes[q]));
      if (!c) {
        if (out.mismatch.empty()) out.mismatch = "product " + labels[p] + "." + labels[q] + " leaves the span";
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!(*c)[k].is_rational() && out.mismatch.empty())
          out.mismatch = "product " + labels[p] + "." + labels[q] + " has irrational coefficient on " + labels[k];
        out.alg.table[p][q][k] = (*c)[k].re();
      }
      Eisenstein g = fock::invariant_form(axes[p], axes[q]);
      if (!g.is_rational() && out.mismatch.empty()) out.mismatch = "form " + labels[p] + "," + labels[q] + " irrational";
      out.alg.gram(p, q) = g.re();
    }
  return out;
}

std::string first_difference(const StructureAlgebra& a, const StructureAlgebra& b) {
  for (std::size_t p = 0; p < a.dim; ++p)
    for (std::size_t q = 0; q < a.dim; ++q) {
      if (a.gram(p, q) != b.gram(p, q))
        return "gram " + a.labels[p] + "," + a.labels[q] + ": " + str(a.gram(p, q)) + " vs " + str(b.gram(p, q));
      for (std::size_t k = 0; k < a.dim; ++k)
        if (a.table[p][q][k] != b.table[p][q][k])
          return "table " + a.labels[p] + "." + a.labels[q] + " on " + a.labels[k] + ": " + str(a.table[p][q][k]) + " vs " +
                 str(b.table[p][q][k]);
    }
  return "none";
}

void cross_checks(Shared& sh, Recorder& rec) {
  const AxisFamily& f = sh.family();
  std::vector<FockState> axes;
  std::vector<std::string> labels;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      axes.push_back(f.at(i, j));
      labels.push_back("e" + std::to_string(i) + std::to_string(j));
    }
  Extracted g = extract_algebra(axes, labels);
  rec.check("cross.g9-closed", g.mismatch.empty() ? "closed" : g.mismatch, "closed", "stated",
            "the lattice axes span a subalgebra with rational structure constants");
  StructureAlgebra ref = axial::build_G9();
  rec.check("cross.g9-product-e00-e01", join(g.alg.table[0][1]), "(1/32, 1/32, -1/32, 0, 0, 0, 0, 0, 0)", "stated",
            "e^{0,0} . e^{0,1} = 1/32 (e^{0,0} + e^{0,1} - e^{0,2})");
  rec.check("cross.g9-gram-e11-e20", str(g.alg.gram(axial::g9_index(1, 1), axial::g9_index(2, 0))), "1/256", "stated",
            "distinct axes pair to 1/256");
  std::size_t diag = 0;
  for (std::size_t p = 0; p < 9; ++p)
    if (g.alg.gram(p, p) == Rational(1, 4)) ++diag;
  rec.check("cross.g9-gram-diagonal", ratio(diag, 9), "9/9", "stated", "every axis has norm 1/4");
  std::vector<std::size_t> id{0, 1, 2, 3, 4, 5, 6, 7, 8};
  bool iso = axial::isomorphism_check(g.alg, ref, id);
  rec.check("cross.g9-isomorphic", iso ? "true" : "false at " + first_difference(g.alg, ref), "true", "stated",
            "the lattice axes realize the abstract nine-dimensional algebra under the identity map");

  std::vector<FockState> three{f.at(0, 0), f.at(0, 1), f.at(0, 2)};
  Extracted c = extract_algebra(three, {"e00", "e01", "e02"});
  StructureAlgebra ref3 = axial::build_3C();
  bool iso3 = c.mismatch.empty() && axial::isomorphism_check(c.alg, ref3, {0, 1, 2});
  rec.check("cross.3c-isomorphic", iso3 ? "true" : "false at " + (c.mismatch.empty() ? first_difference(c.alg, ref3) : c.mismatch),
            "true", "stated", "e_M, e_N, e_Nt span a copy of the 3C algebra");
}

// ---- commutant ---------------------------------------------------------------

void commutant_checks(Shared& sh, Recorder& rec) {
  const AxisFamily& f = sh.family();
  const auto& ctx = *f.ctx;
  auto report = fock::check_commutant_annihilation(f);
  const long per_op = static_cast<long>(ctx.cube.k_roots.size()) * 9;
  for (const char* op : {"H0", "H1", "E0", "E1"}) {
    long bad = std::count_if(report.failures.begin(), report.failures.end(), [&](const auto& x) { return x.op == op; });
    std::string lower = op;
    lower[0] = static_cast<char>(std::tolower(lower[0]));
    rec.check(std::string("commutant.") + lower + "-kills-axes", str(per_op - bad) + "/" + str(per_op), "648/648", "stated",
              std::string("the ") + (op[0] == 'H' ? "H_alpha" : "E_alpha") + " mode " + op[1] +
                  " annihilates every e^{i,j} for alpha in K(2)");
  }
  rec.check("commutant.check-count", str(report.checks), "2592", "derived", "four modes, 72 roots, nine axes");
  FockState o1 = fock::sugawara_omega(ctx);
  FockState o2 = fock::sugawara_by_lattice(ctx);
  FockState o3 = fock::sugawara_by_axes(f);
  rec.check("commutant.sugawara-forms-agree", str(o1 == o2) + " " + str(o1 == o3), "true true", "stated",
            "the affine Sugawara vector equals its lattice expression and omega_L minus 8/9 of the axis sum");
  rec.check("commutant.sugawara-virasoro",
            str(fock::griess_product(o1, o1) == Rational(2) * o1) + " " + str(Rational(2) * fock::invariant_form(o1, o1).re()),
            "true 20", "stated", "Omega is a Virasoro vector of central charge 20");
  const FockSpace& sp = *ctx.space;
  std::size_t good = 0, total = 0;
  for (std::size_t i = 0; i < ctx.cube.MN.rank(); ++i)
    for (const Eisenstein& s : {Eisenstein(1), Eisenstein::zeta_pow(1)}) {
      ++total;
      FockState h = s * FockState::oscillator(sp, ctx.cube.MN.basis_vector(i), 1);
      if (fock::mode(o1, 1, h) == Rational(3, 4) * h) ++good;
    }
  rec.check("commutant.omega-on-MN", ratio(good, total), "32/32", "stated",
            "Omega_1 h(-1) = 3/4 h(-1) for h in (M + N) over Q(zeta)");
  rec.check("commutant.omega-kills-eM", str(fock::mode(o1, 1, f.at(0, 0)).is_zero()), "true", "derived",
            "Omega_1 annihilates e_M");
  FockState eb = fock::e_alpha(ctx, ctx.cube.b);
  rec.check("commutant.control-outside-K",
            str(fock::mode(eb, 1, f.at(0, 0)).is_zero()) + " " + str(fock::mode(eb, 1, f.at(1, 0)).is_zero()), "true false",
            "derived", "a root outside K kills e_M but not the twisted axis e^{1,0}");
}

// ---- real form ---------------------------------------------------------------

void real_form_checks(Shared& sh, Recorder& rec) {
  const AxisFamily& f = sh.family();
  const auto& ctx = *f.ctx;
  fock::RealForm rf = fock::real_form_components(f);
  const FockState& em = f.at(0, 0);
  rec.check("real.components-sum", str(rf.x0 + rf.x1 + rf.x2 == em), "true", "stated", "X0 + X1 + X2 = e_M");
  rec.check("real.x0-rational", str(rf.x0.all_rational()), "true", "stated", "X0 has rational coefficients");
  rec.check("real.x1-x2-cosets",
            str(rf.x1 == fock::coset_sum(ctx, 1)) + " " + str(rf.x2 == fock::coset_sum(ctx, -1)) + " " + str(rf.x1.size()),
            "true true 84", "stated", "X1 and X2 are 1/32 times the exponential sums over the two nontrivial cosets");
  FockState plus = rf.x1 + rf.x2, minus = rf.x1 - rf.x2;
  rec.check("real.theta-eigenspaces",
            str(fock::theta(rf.x0) == rf.x0) + " " + str(fock::theta(plus) == plus) + " " +
                str(fock::theta(minus) == Rational(-1) * minus),
            "true true true", "stated", "X0 and X1 + X2 are theta-even, X1 - X2 is theta-odd");
  const FockState& rho_em = f.at(1, 0);
  rec.check("real.rho-eigencomponents",
            str(rho_em == rf.x0 + Eisenstein::zeta_pow(2) * rf.x1 + Eisenstein::zeta_pow(1) * rf.x2), "true", "derived",
            "rho acts on X0, X1, X2 by 1, zeta^2, zeta");
  FockState rest = rho_em - rf.x0 + Rational(1, 2) * plus;
  std::string coeff = "not a multiple of X1 - X2";
  if (!minus.is_zero()) {
    const auto& [m, c0] = *minus.terms().begin();
    Eisenstein c = rest.coefficient(m) / c0;
    if (rest == c * minus) coeff = str(c);
  }
  rec.check("real.rho-eM-odd-coefficient", coeff, str(Rational(1, 2) * Eisenstein::sqrt_minus3()), "stated",
            "rho e_M = X0 - 1/2 (X1 + X2) + sqrt(-3)/2 (X1 - X2)");

  RatMatrix gram(9, 9);
  bool rational = true;
  for (int p = 0; p < 9; ++p)
    for (int q = 0; q < 9; ++q) {
      Eisenstein g = fock::invariant_form(f.at(p / 3, p % 3), f.at(q / 3, q % 3));
      rational = rational && g.is_rational();
      gram(p, q) = g.re();
    }
  auto minors = num::leading_principal_minors(gram);
  std::size_t positive = std::count_if(minors.begin(), minors.end(), [](const Rational& x) { return x.sign() > 0; });
  rec.check("real.gram-positive", str(rational) + " " + ratio(positive, minors.size()), "true 9/9", "stated",
            "the Gram matrix of the nine axes is rational with all leading principal minors positive");
}

// ---- central charges ---------------------------------------------------------

void central_charge_checks(Shared&, Recorder& rec) {
  using axial::lie_type;
  auto sl9 = axial::affine_central_charge(lie_type("sl9"), 3);
  rec.check("cc.sl9-level3", str(sl9), "20", "stated", "the level-3 affine sl9 VOA has c = 20");
  rec.check("cc.sl9-coset", str(Rational(24) - sl9), "4", "stated", "its commutant in a c = 24 VOA has c = 4");
  rec.check("cc.sl3-level9-parafermion", str(axial::parafermion_central_charge(lie_type("sl3"), 9)), "4", "stated",
            "the level-9 sl3 parafermion algebra has c = 4");
  rec.check("cc.e8-level3-coset", str(Rational(24) - axial::affine_central_charge(lie_type("E8"), 3)), "16/11", "stated",
            "24 minus the level-3 E8 central charge is 16/11");
  rec.check("cc.sl2-level9-parafermion", str(axial::parafermion_central_charge(lie_type("sl2"), 9)), "16/11", "stated",
            "the level-9 sl2 parafermion algebra has c = 16/11");
  auto g9 = axial::build_G9();
  auto omega_c = axial::certify_virasoro(g9, axial::g9_elements().omega);
  rec.check("cc.g9-omega", omega_c ? str(*omega_c) : "not idempotent", "4", "stated",
            "the sum of the nine axes scaled by 32/63 has c = 4");

  auto ps = fock::make_parafermion_space();
  AmbientVec alpha{Rational(1), Rational(-1), Rational(0)};
  FockState w = fock::parafermion_omega(*ps, alpha, -1);
  rec.check("cc.parafermion-omega",
            str(fock::griess_product(w, w) == Rational(2) * w) + " " + str(Rational(2) * fock::invariant_form(w, w).re()),
            "true 16/11", "stated", "omega_alpha in the A26 lattice VOA is a Virasoro vector of c = 16/11");
  lat::EmbeddingMaps maps(8, 2);
  rec.check("cc.parafermion-heisenberg", str(fock::heisenberg_mode(maps.mu(alpha), 1, w).is_zero()), "true", "derived",
            "omega_alpha commutes with the Heisenberg field of mu(alpha)");
}

// ---- abstract algebras -------------------------------------------------------

void abstract_checks(Shared& sh, Recorder& rec) {
  using namespace axial;
  auto c3 = build_3C();
  Vec w3 = scale(Rational(32, 33), Vec({Rational(1), Rational(1), Rational(1)}));
  auto c_w3 = certify_virasoro(c3, w3);
  auto c_a3 = certify_virasoro(c3, sub(w3, c3.basis(0)));
  rec.check("abstract.3c-omega", c_w3 ? str(*c_w3) : "not idempotent", "16/11", "stated",
            "in 3C the scaled sum of the axes is a Virasoro vector of c = 16/11");
  rec.check("abstract.3c-complement", c_a3 ? str(*c_a3) : "not idempotent", "21/22", "stated",
            "omega minus one axis has c = 21/22");
  rec.check("abstract.3c-axioms", str(c3.is_commutative()) + " " + str(c3.is_form_associative()), "true true", "definition",
            "3C is commutative with an associative form");

  auto g = build_G9();
  auto el = g9_elements();
  rec.check("abstract.g9-gram-rank", str(num::rank(g.gram)), "9", "stated", "the nine axes are linearly independent");
  rec.check("abstract.g9-gram-det", str(num::determinant(g.gram)), str(Rational(9, 32) * Rational(63, 256).pow(8)), "derived",
            "determinant of the axis Gram matrix");
  auto c_omega = certify_virasoro(g, el.omega);
  rec.check("abstract.g9-omega-c4", c_omega ? str(*c_omega) : "not idempotent", "4", "stated",
            "omega = 32/63 times the axis sum has c = 4");
  rec.check("abstract.g9-omega-identity", str(adjoint(g, scale(Rational(1, 2), el.omega)) == RatMatrix::identity(9)), "true",
            "stated", "omega/2 is the identity of the algebra");
  rec.check("abstract.g9-axioms", str(g.is_commutative()) + " " + str(g.is_form_associative()), "true true", "definition",
            "the algebra is commutative with an associative form");

  std::vector<Rational> a_c;
  for (const auto& a : el.a) {
    auto c = certify_virasoro(g, a);
    a_c.push_back(c ? *c : Rational(-1));
  }
  rec.check("abstract.a-central-charges", join(a_c), "(21/22, 21/22, 21/22, 21/22)", "stated", "each a^i has c = 21/22");
  std::size_t rel = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<int> rest;
      for (int k = 0; k < 4; ++k)
        if (k != i && k != j) rest.push_back(k);
      Vec rhs = scale(Rational(1, 33), sub(sub(add(scale(Rational(2), el.a[i]), scale(Rational(2), el.a[j])), el.a[rest[0]]),
                                          el.a[rest[1]]));
      if (g.product(el.a[i], el.a[j]) == rhs) ++rel;
    }
  rec.check("abstract.a-products", ratio(rel, 6), "6/6", "stated", "a^i . a^j = 1/33 (2a^i + 2a^j - a^k - a^l)");

  Vec e = g.basis(g9_index(0, 0));
  bool orth = is_zero(g.product(e, el.a[0])) && is_zero(g.product(e, el.b1)) && is_zero(g.product(el.a[0], el.b1)) &&
              g.form(e, el.a[0]).is_zero() && g.form(e, el.b1).is_zero() && g.form(el.a[0], el.b1).is_zero();
  rec.check("abstract.frame-orthogonal", str(orth) + " " + str(add(add(e, el.a[0]), el.b1) == el.omega), "true true", "stated",
            "e^{0,0}, a^1, b^1 are mutually orthogonal and sum to omega");
  std::vector<Rational> fc;
  for (const Vec* v : {&e, &el.a[0], &el.b1}) {
    auto c = certify_virasoro(g, *v);
    fc.push_back(c ? *c : Rational(-1));
  }
  rec.check("abstract.frame-central-charges", join(fc), "(1/2, 21/22, 28/11)", "stated",
            "the frame has central charges 1/2, 21/22, 28/11");

  std::vector<Vec> frame{e, el.a[0], el.b1};
  auto axis = [&](int i, int j) { return g.basis(g9_index(i, j)); };
  auto hw = [&](const Vec& v) {
    auto r = highest_weight_check(g, v, frame);
    return r ? join(*r) : std::string("not an eigenvector");
  };
  Vec r1 = add(add(axis(1, 0), axis(1, 1)), axis(1, 2));
  Vec r2 = add(add(axis(2, 0), axis(2, 1)), axis(2, 2));
  rec.check("abstract.hw-a2-a3", hw(sub(el.a[1], el.a[2])), "(0, 1/11, 21/11)", "stated",
            "a^2 - a^3 is a highest weight vector of weights (0, 1/11, 21/11)");
  rec.check("abstract.hw-e01-e02", hw(sub(axis(0, 1), axis(0, 2))), "(1/16, 31/16, 0)", "stated",
            "e^{0,1} - e^{0,2} has weights (1/16, 31/16, 0)");
  rec.check("abstract.hw-row-difference", hw(sub(r1, r2)), "(1/16, 21/176, 20/11)", "stated",
            "the difference of the second and third row sums has weights (1/16, 21/176, 20/11)");
  rec.check("abstract.hw-twisted", hw(sub(sub(axis(1, 1), axis(2, 2)), sub(axis(1, 2), axis(2, 1)))),
            "(1/16, 5/176, 21/11)", "stated",
            "e^{1,1} - e^{2,2} - e^{1,2} + e^{2,1} has weights (1/16, 5/176, 21/11)");

  std::size_t certified = 0, autos = 0, sigma_trivial = 0;
  std::vector<LinearEndo> taus;
  for (std::size_t p = 0; p < 9; ++p) {
    if (certify_axis(g, g.basis(p)).ok()) ++certified;
    auto t = miyamoto_tau(g, g.basis(p));
    if (t.automorphism) ++autos;
    if (miyamoto_sigma(g, g.basis(p)).is_identity()) ++sigma_trivial;
    taus.push_back(t);
  }
  rec.check("abstract.axes-certified", ratio(certified, 9), "9/9", "stated",
            "each axis is idempotent with c = 1/2 and spectrum in {2, 0, 1/2, 1/16}");
  rec.check("abstract.tau-automorphisms", ratio(autos, 9), "9/9", "stated", "every Miyamoto involution is an automorphism");
  rec.check("abstract.sigma-trivial", ratio(sigma_trivial, 9), "9/9", "derived",
            "sigma is trivial on the tau-fixed subalgebra for every axis");
  const std::size_t bound = sh.opts().closure_bound;
  auto group = group_closure({taus[g9_index(0, 0)], taus[g9_index(0, 1)], taus[g9_index(1, 0)]}, bound);
  auto all = group_closure(taus, bound);
  rec.check("abstract.group-order", str(group.order()) + " " + str(all.order()), "18 18", "stated",
            "the Miyamoto involutions generate a group of order 18");
  auto shape = analyse_shape(group);
  rec.check("abstract.group-shape",
            str(shape.o3_order) + " " + str(shape.o3_normal) + " " + str(shape.involutions) + " " +
                str(shape.involutions_conjugate),
            "9 true 9 true", "stated", "normal 3-subgroup of order 9, nine involutions, all conjugate");
  RatMatrix gm = taus[g9_index(0, 0)].matrix * taus[g9_index(1, 0)].matrix;
  RatMatrix hm = taus[g9_index(0, 0)].matrix * taus[g9_index(0, 1)].matrix;
  rec.check("abstract.g-h-commute",
            str(gm * hm == hm * gm) + " " + str(group.element_order(group.index_of(gm))) + " " +
                str(group.element_order(group.index_of(hm))),
            "true 3 3", "stated", "g and h commute and both have order 3");
}

// ---- registry ----------------------------------------------------------------

struct Group {
  const char* name;
  const char* suite;
  void (*run)(Shared&, Recorder&);
};

// Dependency order: lattice, cocycle, fock, then the abstract algebras and cross-validation.
const std::vector<Group>& groups() {
  static const std::vector<Group> g{
      {"lattice", "lattice-combinatorics", lattice_checks},
      {"cocycle", "cocycle", cocycle_checks},
      {"fock", "fock-axes", fock_axis_checks},
      {"commutant", "commutant", commutant_checks},
      {"real", "real-form", real_form_checks},
      {"cc", "central-charges", central_charge_checks},
      {"abstract", "griess-abstract", abstract_checks},
      {"cross", "fock-axes", cross_checks},
  };
  return g;
}

std::vector<CheckResult> run_group(const Group& g, Shared& sh) {
  Recorder rec(sh.opts().timings);
  try {
    g.run(sh, rec);
  } catch (const std::exception& e) {
    rec.check(std::string(g.name) + ".error", std::string("exception: ") + e.what(), "no exception", "derived",
              "the check group ran to completion");
  }
  return std::move(rec.results);
}

VerificationReport run_groups(const std::string& suite, const std::vector<const Group*>& selected, const RunOptions& opts) {
  Shared sh(opts);
  std::vector<std::vector<CheckResult>> parts(selected.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(selected.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) parts[i] = run_group(*selected[i], sh);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i; (i = next++) < selected.size();) parts[i] = run_group(*selected[i], sh);
      });
    for (auto& t : workers) t.join();
  }
  VerificationReport r{suite, kVersion, opts.seed, {}};
  for (auto& p : parts)
    for (auto& c : p) r.results.push_back(std::move(c));
  return r;
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> VerificationReport::failing_ids() const {
  std::vector<std::string> out;
  for (const auto& c : results)
    if (!c.pass) out.push_back(c.id);
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"griess-abstract", "lattice-combinatorics", "cocycle", "fock-axes",
                                              "commutant",       "real-form",             "central-charges", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

VerificationReport run_suite(const std::string& name, const RunOptions& opts) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  std::vector<const Group*> selected;
  for (const auto& g : groups())
    if (name == "all" || name == g.suite) selected.push_back(&g);
  return run_groups(name, selected, opts);
}

VerificationReport cross_validate(const RunOptions& opts) {
  std::vector<const Group*> selected;
  for (const auto& g : groups())
    if (std::string(g.name) == "cross") selected.push_back(&g);
  return run_groups("cross-validate", selected, opts);
}

std::string emit_report(const VerificationReport& r, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["version"] = r.version;
    j["seed"] = r.seed;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& c : r.results) {
      nlohmann::ordered_json e;
      e["id"] = c.id;
      e["status"] = c.pass ? "pass" : "fail";
      e["computed"] = c.computed;
      e["expected"] = c.expected;
      e["provenance"] = c.provenance;
      e["quote"] = c.quote;
      e["elapsed_ms"] = c.elapsed_ms;
      j["results"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
  }
  std::size_t width = 2;
  for (const auto& c : r.results) width = std::max(width, c.id.size());
  std::ostringstream os;
  os << "suite " << r.suite << "  version " << r.version << "  seed " << r.seed << "\n";
  for (const auto& c : r.results) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.id << std::string(width - c.id.size() + 2, ' ') << c.computed;
    if (!c.pass) os << "  (expected " << c.expected << ")";
    os << "\n";
  }
  auto failing = r.failing_ids();
  os << r.results.size() << " checks, " << failing.size() << " failed\n";
  for (const auto& id : failing) os << "failed: " << id << "\n";
  return os.str();
}

}  // namespace griess::scenarios
