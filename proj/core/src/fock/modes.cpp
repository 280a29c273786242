#include "griess/fock/modes.hpp"

#include <array>
#include <stdexcept>

namespace griess::fock {
namespace {

struct Term {
  const Monomial* m;
  Eisenstein c;
  std::uint64_t mask;
  int osc_w;
  int norm;  // D^2 <gamma, gamma>
};

std::vector<Term> prepare(const FockState& s) {
  std::vector<Term> out;
  out.reserve(s.size());
  const auto& sp = s.space();
  for (const auto& [m, c] : s.terms())
    out.push_back({&m, c, sp.parity_mask(m.gamma), m.osc_weight(), sp.scaled_inner(m.gamma, m.gamma)});
  return out;
}

// One oscillator list of a monomial under construction; never more than four
// entries before the weight filter is applied.
struct OscList {
  std::array<Osc, 4> o{};
  int n = 0;
  void push(int mode, int dir) { o[n++] = Osc{static_cast<std::uint8_t>(mode), static_cast<std::uint8_t>(dir)}; }
};

class Emitter {
 public:
  Emitter(const FockSpace& sp, FockState& out) : sp_(sp), out_(out) {}

  void set_target(const Exponent& gamma, const Eisenstein& coef) {
    gamma_ = gamma;
    coef_ = coef;
  }

  void emit(const OscList& l, const Rational& f) {
    if (f.is_zero()) return;
    if (l.n > 2) throw std::logic_error("mode: more than two oscillators at weight <= 2");
    Monomial m;
    m.gamma = gamma_;
    m.n_osc = static_cast<std::uint8_t>(l.n);
    for (int i = 0; i < l.n; ++i) m.osc[i] = l.o[i];
    m.sort_osc();
    out_.add_term(m, coef_ * f);
  }

  // prefix * S_e(beta), S the elementary Schur polynomials of
  // exp(sum beta(-k) z^k / k).
  void emit_schur(const OscList& prefix, int e, const Rational& f, const Exponent& beta) {
    const int dim = static_cast<int>(sp_.dim());
    const long long d = sp_.denom();
    if (e == 0) {
      emit(prefix, f);
    } else if (e == 1) {
      for (int c = 0; c < dim; ++c) {
        if (!beta[c]) continue;
        OscList l = prefix;
        l.push(1, c);
        emit(l, f * Rational(beta[c], d));
      }
    } else if (e == 2) {
      for (int c = 0; c < dim; ++c) {
        if (!beta[c]) continue;
        OscList l = prefix;
        l.push(2, c);
        emit(l, f * Rational(beta[c], 2 * d));
        for (int c2 = c; c2 < dim; ++c2) {
          if (!beta[c2]) continue;
          OscList q = prefix;
          q.push(1, c);
          q.push(1, c2);
          Rational x(static_cast<long long>(beta[c]) * beta[c2], d * d);
          emit(q, f * (c == c2 ? x / Rational(2) : x));
        }
      }
    } else {
      throw std::logic_error("mode: Schur degree above 2");
    }
  }

 private:
  const FockSpace& sp_;
  FockState& out_;
  Exponent gamma_{};
  Eisenstein coef_;
};

struct PairGeometry {
  int w;         // output weight
  int r_total;   // oscillator weight available in the output
  Exponent sum{};  // beta + gamma
};

// Returns false when the pair cannot contribute.
bool pair_geometry(const FockSpace& sp, const Term& u, const Term& v, int n, PairGeometry& g) {
  const int d2 = sp.denom() * sp.denom();
  const int wu = u.osc_w + u.norm / (2 * d2);
  const int wv = v.osc_w + v.norm / (2 * d2);
  g.w = wu + wv - n - 1;
  if (g.w < 0) return false;
  if (g.w > kMaxWeight) throw std::domain_error("mode: output weight " + std::to_string(g.w) + " exceeds 2");
  const int bg = sp.scaled_inner(u.m->gamma, v.m->gamma);
  const int nbg = u.norm + 2 * bg + v.norm;
  if (nbg > 2 * g.w * d2) return false;
  g.r_total = g.w - nbg / (2 * d2);
  for (std::size_t k = 0; k < sp.dim(); ++k) {
    int s = u.m->gamma[k] + v.m->gamma[k];
    if (s > 127 || s < -128) throw std::domain_error("mode: exponent coordinate overflow");
    g.sum[k] = static_cast<std::int8_t>(s);
  }
  return true;
}

void general_pair(const FockSpace& sp, const Term& u, const Term& v, int n, Emitter& em) {
  PairGeometry g;
  if (!pair_geometry(sp, u, v, n, g)) return;
  Eisenstein coef = u.c * v.c;
  if (sp.cocycle().epsilon_masks(u.mask, v.mask)) coef = -coef;
  em.set_target(g.sum, coef);

  const Monomial& um = *u.m;
  const Monomial& vm = *v.m;
  const Exponent& beta = um.gamma;
  const Exponent& gamma = vm.gamma;
  const long long d = sp.denom();
  const int nu = um.n_osc;
  const int nv = vm.n_osc;

  for (int smask = 0; smask < (1 << nu); ++smask) {
    std::array<int, 2> annihilators{};
    int n_ann = 0;
    for (int i = 0; i < nu; ++i)
      if (!(smask >> i & 1)) annihilators[n_ann++] = i;

    // Assign every annihilating factor either its zero mode or one of the
    // v oscillators in the same direction.
    auto assign = [&](auto&& self, int k, int removed, const Rational& f) -> void {
      if (f.is_zero()) return;
      if (k == n_ann) {
        // E^+(-beta): remove any subset of what is left, factor -beta_d each.
        int left[2];
        int n_left = 0;
        for (int j = 0; j < nv; ++j)
          if (!(removed >> j & 1)) left[n_left++] = j;
        for (int tmask = 0; tmask < (1 << n_left); ++tmask) {
          Rational ft = f;
          OscList rest;
          int rest_w = 0;
          for (int t = 0; t < n_left; ++t) {
            const Osc& o = vm.osc[left[t]];
            if (tmask >> t & 1) {
              ft *= Rational(-beta[o.dir], d);
            } else {
              rest.push(o.mode, o.dir);
              rest_w += o.mode;
            }
          }
          if (ft.is_zero()) continue;
          const int budget = g.r_total - rest_w;
          if (budget < 0) continue;
          // creation parts of the factors in S
          if (smask == 0) {
            em.emit_schur(rest, budget, ft, beta);
          } else if (nu - n_ann == 1) {
            const int i = smask == 1 ? 0 : 1;
            const Osc& o = um.osc[i];
            for (int kmode = o.mode; kmode <= budget; ++kmode) {
              OscList l = rest;
              l.push(kmode, o.dir);
              Rational b = o.mode == 1 ? Rational(1) : Rational(kmode - 1);
              em.emit_schur(l, budget - kmode, ft * b, beta);
            }
          } else {
            const Osc& o1 = um.osc[0];
            const Osc& o2 = um.osc[1];
            for (int k1 = o1.mode; k1 <= budget; ++k1)
              for (int k2 = o2.mode; k1 + k2 <= budget; ++k2) {
                OscList l = rest;
                l.push(k1, o1.dir);
                l.push(k2, o2.dir);
                Rational b = (o1.mode == 1 ? Rational(1) : Rational(k1 - 1)) * (o2.mode == 1 ? Rational(1) : Rational(k2 - 1));
                em.emit_schur(l, budget - k1 - k2, ft * b, beta);
              }
          }
        }
        return;
      }
      const Osc& o = um.osc[annihilators[k]];
      // zero mode: binom(-1, n_i - 1) gamma_c
      if (gamma[o.dir]) {
        Rational z(gamma[o.dir], d);
        self(self, k + 1, removed, f * (o.mode == 1 ? z : -z));
      }
      for (int j = 0; j < nv; ++j) {
        if (removed >> j & 1) continue;
        const Osc& q = vm.osc[j];
        if (q.dir != o.dir) continue;
        // binom(-m-1, n_i-1) * m
        Rational c = o.mode == 1 ? Rational(q.mode) : Rational(-(q.mode + 1) * q.mode);
        self(self, k + 1, removed | (1 << j), f * c);
      }
    };
    assign(assign, 0, 0, Rational(1));
  }
}

// S_k(beta) as a list of oscillator patterns, k = 0, 1, 2.
struct SchurTable {
  std::array<std::vector<std::pair<OscList, Rational>>, 3> by_degree;
};

SchurTable schur_table(const FockSpace& sp, const Exponent& beta) {
  SchurTable t;
  const long long d = sp.denom();
  t.by_degree[0].push_back({OscList{}, Rational(1)});
  for (std::size_t c = 0; c < sp.dim(); ++c) {
    if (!beta[c]) continue;
    OscList one;
    one.push(1, static_cast<int>(c));
    t.by_degree[1].push_back({one, Rational(beta[c], d)});
    OscList two;
    two.push(2, static_cast<int>(c));
    t.by_degree[2].push_back({two, Rational(beta[c], 2 * d)});
    for (std::size_t c2 = c; c2 < sp.dim(); ++c2) {
      if (!beta[c2]) continue;
      OscList pr;
      pr.push(1, static_cast<int>(c));
      pr.push(1, static_cast<int>(c2));
      Rational x(static_cast<long long>(beta[c]) * beta[c2], d * d);
      t.by_degree[2].push_back({pr, c == c2 ? x / Rational(2) : x});
    }
  }
  return t;
}

}  // namespace

FockState mode(const FockState& u, int n, const FockState& v, const ModeOptions& opts) {
  if (!u.has_space() || !v.has_space()) return FockState();
  if (&u.space() != &v.space()) throw std::invalid_argument("mode: states live in different spaces");
  const FockSpace& sp = u.space();
  FockState out(sp);
  Emitter em(sp, out);
  auto ut = prepare(u);
  auto vt = prepare(v);

  std::vector<const Term*> v_exp, v_other;
  for (const auto& t : vt) (t.m->n_osc == 0 ? v_exp : v_other).push_back(&t);

  for (const auto& a : ut) {
    const bool pure = a.m->n_osc == 0;
    if (pure && opts.closed_form_exponentials) {
      // Bucket the exponential partners by k = -n-1-<beta,gamma>.
      std::array<std::vector<std::pair<const Term*, PairGeometry>>, 3> buckets;
      for (const Term* b : v_exp) {
        PairGeometry g;
        if (pair_geometry(sp, a, *b, n, g)) buckets[g.r_total].push_back({b, g});
      }
      bool any = !buckets[0].empty() || !buckets[1].empty() || !buckets[2].empty();
      if (any) {
        SchurTable st = schur_table(sp, a.m->gamma);
        for (int k = 0; k < 3; ++k)
          for (const auto& [b, g] : buckets[k]) {
            Eisenstein coef = a.c * b->c;
            if (sp.cocycle().epsilon_masks(a.mask, b->mask)) coef = -coef;
            em.set_target(g.sum, coef);
            for (const auto& [l, f] : st.by_degree[k]) em.emit(l, f);
          }
      }
      for (const Term* b : v_other) general_pair(sp, a, *b, n, em);
    } else {
      for (const auto& b : vt) general_pair(sp, a, b, n, em);
    }
  }
  return out;
}

FockState heisenberg_mode(const std::vector<Eisenstein>& h, int m, const FockState& s) {
  if (!s.has_space()) return FockState();
  const FockSpace& sp = s.space();
  if (h.size() != sp.dim()) throw std::invalid_argument("heisenberg_mode: dimension mismatch");
  FockState out(sp);
  for (const auto& [mono, c] : s.terms()) {
    if (m > 0) {
      for (int j = 0; j < mono.n_osc; ++j) {
        const Osc& o = mono.osc[j];
        if (o.mode != m || h[o.dir].is_zero()) continue;
        Monomial r = mono;
        r.n_osc = static_cast<std::uint8_t>(mono.n_osc - 1);
        if (j == 0) r.osc[0] = mono.osc[1];
        r.sort_osc();
        out.add_term(r, c * h[o.dir] * Rational(m));
      }
    } else if (m == 0) {
      Eisenstein x;
      for (std::size_t k = 0; k < sp.dim(); ++k)
        if (mono.gamma[k]) x += h[k] * Rational(mono.gamma[k], sp.denom());
      out.add_term(mono, c * x);
    } else {
      if (sp.weight(mono) + Rational(-m) > Rational(kMaxWeight))
        throw std::domain_error("heisenberg_mode: output weight exceeds 2");
      for (std::size_t k = 0; k < sp.dim(); ++k) {
        if (h[k].is_zero()) continue;
        Monomial r = mono;
        r.osc[r.n_osc++] = Osc{static_cast<std::uint8_t>(-m), static_cast<std::uint8_t>(k)};
        r.sort_osc();
        out.add_term(r, c * h[k]);
      }
    }
  }
  return out;
}

FockState heisenberg_mode(const AmbientVec& h, int m, const FockState& s) {
  return heisenberg_mode(std::vector<Eisenstein>(h.begin(), h.end()), m, s);
}

FockState exp_mode(const AmbientVec& beta, int n, const FockState& s, const ModeOptions& opts) {
  if (!s.has_space()) return FockState();
  return mode(FockState::exponential(s.space(), beta), n, s, opts);
}

FockState griess_product(const FockState& a, const FockState& b, const ModeOptions& opts) {
  if (!a.is_homogeneous(2) || !b.is_homogeneous(2))
    throw std::invalid_argument("griess_product: arguments must be homogeneous of weight 2");
  return mode(a, 1, b, opts);
}

Eisenstein invariant_form(const FockState& a, const FockState& b) {
  if (!a.is_homogeneous(2) || !b.is_homogeneous(2))
    throw std::invalid_argument("invariant_form: arguments must be homogeneous of weight 2");
  FockState r = mode(a, 3, b);
  if (r.is_zero()) return Eisenstein();
  return r.coefficient(Monomial{});
}

FockState l_minus_one(const FockState& s) {
  if (!s.has_space()) return FockState();
  const FockSpace& sp = s.space();
  FockState out(sp);
  for (const auto& [mono, c] : s.terms()) {
    if (sp.weight(mono) + Rational(1) > Rational(kMaxWeight))
      throw std::domain_error("l_minus_one: output weight exceeds 2");
    for (int j = 0; j < mono.n_osc; ++j) {
      Monomial r = mono;
      r.osc[j].mode = static_cast<std::uint8_t>(r.osc[j].mode + 1);
      r.sort_osc();
      out.add_term(r, c * Rational(mono.osc[j].mode));
    }
    for (std::size_t k = 0; k < sp.dim(); ++k) {
      if (!mono.gamma[k]) continue;
      Monomial r = mono;
      r.osc[r.n_osc++] = Osc{1, static_cast<std::uint8_t>(k)};
      r.sort_osc();
      out.add_term(r, c * Rational(mono.gamma[k], sp.denom()));
    }
  }
  return out;
}

}  // namespace griess::fock
