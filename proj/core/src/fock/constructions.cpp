#include "griess/fock/constructions.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "griess/lattice/glue.hpp"

namespace griess::fock {

using lat::E8Cube;
using lat::eta;

FockState virasoro_of_subspace(const FockSpace& space, const std::vector<AmbientVec>& rows) {
  if (rows.empty()) throw std::invalid_argument("virasoro_of_subspace: empty subspace");
  for (const auto& r : rows)
    if (r.size() != space.dim()) throw std::invalid_argument("virasoro_of_subspace: dimension mismatch");
  auto rr = num::rref(num::RatMatrix::from_rows(rows));
  num::RatMatrix b(rr.rank, space.dim());
  for (std::size_t i = 0; i < rr.rank; ++i)
    for (std::size_t k = 0; k < space.dim(); ++k) b(i, k) = rr.reduced(i, k);
  auto g_inv = num::inverse(b * b.transpose());
  if (!g_inv) throw std::invalid_argument("virasoro_of_subspace: degenerate subspace");
  num::RatMatrix p = b.transpose() * *g_inv * b;

  FockState out(space);
  for (std::size_t c = 0; c < space.dim(); ++c)
    for (std::size_t d = c; d < space.dim(); ++d) {
      if (p(c, d).is_zero()) continue;
      Monomial m;
      m.n_osc = 2;
      m.osc[0] = Osc{1, static_cast<std::uint8_t>(c)};
      m.osc[1] = Osc{1, static_cast<std::uint8_t>(d)};
      out.add_term(m, Eisenstein(c == d ? p(c, d) / Rational(2) : p(c, d)));
    }
  return out;
}

FockState virasoro_of_subspace(const FockSpace& space, const Lattice& s) {
  std::vector<AmbientVec> rows;
  for (std::size_t i = 0; i < s.rank(); ++i) rows.push_back(s.basis_vector(i));
  return virasoro_of_subspace(space, rows);
}

FockState ising_of_sqrt2E8(const FockSpace& space, const Lattice& s, const lat::ShellCache* cache) {
  if (s.rank() != 8) throw std::invalid_argument("ising_of_sqrt2E8: rank is not 8");
  if (!lat::shell(s, 2, cache).vectors.empty()) throw std::invalid_argument("ising_of_sqrt2E8: lattice has roots");
  auto s4 = lat::shell(s, 4, cache);
  if (s4.vectors.size() != 240) throw std::invalid_argument("ising_of_sqrt2E8: norm-4 shell is not of size 240");
  FockState out = Rational(1, 16) * virasoro_of_subspace(space, s);
  for (const auto& g : s4.vectors) out += FockState::exponential(space, g, Eisenstein(Rational(1, 32)));
  return out;
}

FockState phase_twist(const AmbientVec& v, int k, const FockState& s) {
  if (!s.has_space()) return s;
  const FockSpace& sp = s.space();
  if (v.size() != sp.dim()) throw std::invalid_argument("phase_twist: dimension mismatch");
  FockState out(sp);
  for (const auto& [m, c] : s.terms()) {
    Rational x;
    for (std::size_t i = 0; i < sp.dim(); ++i)
      if (m.gamma[i] && !v[i].is_zero()) x += v[i] * Rational(m.gamma[i], sp.denom());
    if (!x.is_integer()) throw std::invalid_argument("phase_twist: non-integral pairing");
    out.add_term(m, c * Eisenstein::zeta_pow(lat::mod3(x * Rational(k))));
  }
  return out;
}

FockState rho_twist(const AmbientVec& a, int k, const FockState& s) {
  AmbientVec zero(a.size());
  return phase_twist(lat::block3(a, lat::neg(a), zero), k, s);
}

FockState theta(const FockState& s) {
  if (!s.has_space()) return s;
  FockState out(s.space());
  for (const auto& [m, c] : s.terms()) {
    Monomial r = m;
    for (auto& g : r.gamma) g = static_cast<std::int8_t>(-g);
    out.add_term(r, m.n_osc % 2 ? -c : c);
  }
  return out;
}

FockState permute_blocks(const FockState& s, int shift) {
  if (!s.has_space()) return s;
  if (s.space().dim() != 24) throw std::invalid_argument("permute_blocks: state is not 24-dimensional");
  const int off = 8 * (((shift % 3) + 3) % 3);
  FockState out(s.space());
  for (const auto& [m, c] : s.terms()) {
    Monomial r = m;
    for (int i = 0; i < 24; ++i) r.gamma[(i + off) % 24] = m.gamma[i];
    for (int i = 0; i < m.n_osc; ++i) r.osc[i].dir = static_cast<std::uint8_t>((m.osc[i].dir + off) % 24);
    r.sort_osc();
    out.add_term(r, c);
  }
  return out;
}

FockState conjugate(const FockState& s) {
  if (!s.has_space()) return s;
  FockState out(s.space());
  for (const auto& [m, c] : s.terms()) out.add_term(m, c.conj());
  return out;
}

std::optional<std::vector<Eisenstein>> express_in_span(const std::vector<FockState>& basis, const FockState& s) {
  if (basis.empty()) return s.is_zero() ? std::optional<std::vector<Eisenstein>>(std::vector<Eisenstein>{}) : std::nullopt;
  std::map<Monomial, std::size_t> rows;
  for (const auto& b : basis)
    for (const auto& [m, c] : b.terms()) rows.emplace(m, 0);
  for (const auto& [m, c] : s.terms())
    if (!rows.count(m)) return std::nullopt;
  std::size_t r = 0;
  for (auto& [m, idx] : rows) idx = r++;
  num::EisMatrix a(rows.size(), basis.size());
  num::Vec<Eisenstein> rhs(rows.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [m, c] : basis[j].terms()) a(rows[m], j) = c;
  for (const auto& [m, c] : s.terms()) rhs[rows[m]] = c;
  auto x = num::solve_linear(a, rhs);
  if (!x) return std::nullopt;
  FockState check(s.space());
  for (std::size_t j = 0; j < basis.size(); ++j) check += (*x)[j] * basis[j];
  if (check != s) return std::nullopt;
  return *x;
}

std::shared_ptr<const CubeContext> make_cube_context(const lat::ShellCache* cache) {
  auto ctx = std::make_shared<CubeContext>();
  ctx->cube = lat::build_e8_cube(cache);
  ctx->space = std::make_unique<FockSpace>(ctx->cube.L, "V_E8^3");
  ctx->cache = cache;
  return ctx;
}

AxisFamily build_axis_family(std::shared_ptr<const CubeContext> ctx) {
  AxisFamily f;
  f.ctx = ctx;
  FockState row0 = ising_of_sqrt2E8(*ctx->space, ctx->cube.M, ctx->cache);
  for (int j = 0; j < 3; ++j) {
    if (j > 0) row0 = permute_blocks(row0);
    for (int i = 0; i < 3; ++i) f.e[i][j] = rho_twist(ctx->cube.a, i, row0);
  }
  return f;
}

FockState e_alpha(const CubeContext& ctx, const AmbientVec& alpha) {
  FockState out(*ctx.space);
  for (int i = 0; i < 3; ++i) out += FockState::exponential(*ctx.space, eta(i, alpha));
  return out;
}

FockState h_alpha(const CubeContext& ctx, const AmbientVec& alpha) {
  return FockState::oscillator(*ctx.space, lat::block3(alpha, alpha, alpha), 1);
}

FockState sugawara_omega(const CubeContext& ctx) {
  FockState sum = Rational(6) * virasoro_of_subspace(*ctx.space, ctx.cube.E);
  for (const auto& alpha : ctx.cube.k_roots)
    sum -= mode(e_alpha(ctx, alpha), -1, e_alpha(ctx, lat::neg(alpha)));
  return Rational(1, 24) * sum;
}

FockState sugawara_by_lattice(const CubeContext& ctx) {
  const FockSpace& sp = *ctx.space;
  FockState out = virasoro_of_subspace(sp, ctx.cube.E) + Rational(3, 4) * virasoro_of_subspace(sp, ctx.cube.MN);
  std::set<AmbientVec> exps;
  for (const auto& alpha : ctx.cube.k_roots)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) exps.insert(lat::sub(eta(i, alpha), eta(j, alpha)));
  for (const auto& g : exps) out += FockState::exponential(sp, g, Eisenstein(Rational(-1, 12)));
  return out;
}

FockState sugawara_by_axes(const AxisFamily& f) {
  const FockSpace& sp = *f.ctx->space;
  std::vector<AmbientVec> frame;
  for (std::size_t k = 0; k < sp.dim(); ++k) {
    AmbientVec v(sp.dim());
    v[k] = Rational(1);
    frame.push_back(v);
  }
  FockState out = virasoro_of_subspace(sp, frame);
  for (const auto& row : f.e)
    for (const auto& x : row) out -= Rational(8, 9) * x;
  return out;
}

CommutantReport check_commutant_annihilation(const AxisFamily& f) {
  CommutantReport rep;
  const CubeContext& ctx = *f.ctx;
  for (const auto& alpha : ctx.cube.k_roots) {
    FockState h = h_alpha(ctx, alpha);
    FockState e = e_alpha(ctx, alpha);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const FockState& x = f.at(i, j);
        const std::pair<const char*, FockState> results[] = {
            {"H0", mode(h, 0, x)}, {"H1", mode(h, 1, x)}, {"E0", mode(e, 0, x)}, {"E1", mode(e, 1, x)}};
        for (const auto& [name, r] : results) {
          ++rep.checks;
          if (!r.is_zero()) rep.failures.push_back({name, alpha, i, j});
        }
      }
  }
  return rep;
}

RealForm real_form_components(const AxisFamily& f) {
  const FockState& e = f.at(0, 0);
  const FockState& r1 = f.at(1, 0);
  const FockState& r2 = f.at(2, 0);
  const Eisenstein z = Eisenstein::zeta();
  const Eisenstein z2 = Eisenstein::zeta_pow(2);
  RealForm rf;
  rf.x0 = Rational(1, 3) * (e + r1 + r2);
  rf.x1 = Rational(1, 3) * (e + z * r1 + z2 * r2);
  rf.x2 = Rational(1, 3) * (e + z2 * r1 + z * r2);
  return rf;
}

FockState coset_sum(const CubeContext& ctx, int sign) {
  const E8Cube& c = ctx.cube;
  const AmbientVec zero(8);
  std::vector<AmbientVec> kt_rows;
  for (std::size_t i = 0; i < c.K.rank(); ++i) {
    AmbientVec x = c.K.basis_vector(i);
    kt_rows.push_back(lat::block3(x, lat::neg(x), zero));
  }
  Lattice kt = lat::from_vectors("K~", kt_rows);
  AmbientVec shift = lat::scale(Rational(sign), lat::block3(c.b, lat::neg(c.b), zero));
  FockState out(*ctx.space);
  for (const auto& g : lat::shell(c.M, 4, ctx.cache).vectors)
    if (kt.contains(lat::sub(g, shift))) out += FockState::exponential(*ctx.space, g, Eisenstein(Rational(1, 32)));
  return out;
}

std::shared_ptr<const ParafermionSpace> make_parafermion_space() {
  auto ps = std::make_shared<ParafermionSpace>();
  ps->a26 = lat::make_A(26);
  ps->space = std::make_unique<FockSpace>(ps->a26, "V_A26");
  return ps;
}

FockState parafermion_omega(const ParafermionSpace& ps, const AmbientVec& alpha, int h2_sign) {
  constexpr int k = 9;
  const FockSpace& sp = *ps.space;
  lat::EmbeddingMaps maps(8, 2);
  AmbientVec h = maps.mu(alpha);
  FockState x_plus(sp), x_minus(sp);
  for (int j = 1; j <= 9; ++j) {
    x_plus += FockState::exponential(sp, maps.iota(j, alpha));
    x_minus += FockState::exponential(sp, maps.iota(j, lat::neg(alpha)), Eisenstein(-1));
  }
  FockState out = Rational(h2_sign * k) * FockState::oscillator(sp, h, 2);
  out -= heisenberg_mode(h, -1, FockState::oscillator(sp, h, 1));
  out += Rational(2 * k) * mode(x_plus, -1, x_minus);
  return Rational(1, 2 * k * (k + 2)) * out;
}

}  // namespace griess::fock
