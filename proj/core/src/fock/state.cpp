#include "griess/fock/state.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace griess::fock {

int Monomial::osc_weight() const {
  int w = 0;
  for (std::size_t i = 0; i < n_osc; ++i) w += osc[i].mode;
  return w;
}

bool Monomial::has_exponent() const {
  return std::any_of(gamma.begin(), gamma.end(), [](std::int8_t x) { return x != 0; });
}

void Monomial::sort_osc() {
  if (n_osc == 2 && osc[1] < osc[0]) std::swap(osc[0], osc[1]);
  for (std::size_t i = n_osc; i < 2; ++i) osc[i] = Osc{};
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.n_osc != b.n_osc) return a.n_osc < b.n_osc;
  for (std::size_t i = 0; i < a.n_osc; ++i)
    if (a.osc[i] != b.osc[i]) return a.osc[i] < b.osc[i];
  return a.gamma < b.gamma;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint8_t byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (auto g : m.gamma) mix(static_cast<std::uint8_t>(g));
  mix(m.n_osc);
  for (const auto& o : m.osc) {
    mix(o.mode);
    mix(o.dir);
  }
  return static_cast<std::size_t>(h);
}

FockSpace::FockSpace(Lattice lattice, std::string name)
    : name_(std::move(name)), lattice_(std::move(lattice)), cocycle_(cocycle::CocycleTable::build_epsilon0(lattice_)) {
  dim_ = lattice_.ambient_dim();
  if (dim_ > kMaxDim) throw std::invalid_argument("FockSpace: ambient dimension above 32");
  mpz_class d = 1;
  for (std::size_t i = 0; i < lattice_.rank(); ++i)
    for (std::size_t k = 0; k < dim_; ++k) d = lcm(d, lattice_.basis()(i, k).denominator());
  denom_ = static_cast<int>(d.get_si());

  basis_scaled_.assign(lattice_.rank(), std::vector<long long>(dim_));
  for (std::size_t i = 0; i < lattice_.rank(); ++i)
    for (std::size_t k = 0; k < dim_; ++k) basis_scaled_[i][k] = (lattice_.basis()(i, k) * Rational(denom_)).to_int64();

  auto ginv = num::inverse(lattice_.gram());
  if (!ginv) throw std::invalid_argument("FockSpace: degenerate lattice");
  num::RatMatrix pinv = lattice_.basis().transpose() * *ginv;
  mpz_class q = 1;
  for (std::size_t k = 0; k < pinv.rows(); ++k)
    for (std::size_t j = 0; j < pinv.cols(); ++j) q = lcm(q, pinv(k, j).denominator());
  coord_num_.assign(dim_, std::vector<long long>(lattice_.rank()));
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t j = 0; j < lattice_.rank(); ++j) coord_num_[k][j] = (pinv(k, j) * Rational(mpz_class(q))).to_int64();
  coord_den_ = q.get_si() * denom_;
}

Exponent FockSpace::to_exponent(const AmbientVec& gamma) const {
  if (gamma.size() != dim_) throw std::invalid_argument("to_exponent: dimension mismatch");
  Exponent e{};
  for (std::size_t k = 0; k < dim_; ++k) {
    Rational s = gamma[k] * Rational(denom_);
    if (!s.is_integer() || s.abs() > Rational(127)) throw std::invalid_argument("to_exponent: coordinate not representable");
    e[k] = static_cast<std::int8_t>(s.to_int64());
  }
  parity_mask(e);  // validates lattice membership
  return e;
}

AmbientVec FockSpace::to_ambient(const Exponent& gamma) const {
  AmbientVec v(dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    if (gamma[k]) v[k] = Rational(gamma[k], denom_);
  return v;
}

int FockSpace::scaled_inner(const Exponent& a, const Exponent& b) const {
  int s = 0;
  for (std::size_t k = 0; k < dim_; ++k) s += a[k] * b[k];
  return s;
}

Rational FockSpace::inner(const Exponent& a, const Exponent& b) const {
  return Rational(scaled_inner(a, b), static_cast<long long>(denom_) * denom_);
}

Rational FockSpace::weight(const Monomial& m) const {
  return Rational(m.osc_weight()) + inner(m.gamma, m.gamma) / Rational(2);
}

std::uint64_t FockSpace::parity_mask(const Exponent& gamma) const {
  const std::size_t r = lattice_.rank();
  std::vector<long long> x(r);
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < r; ++j) {
    long long s = 0;
    for (std::size_t k = 0; k < dim_; ++k)
      if (gamma[k]) s += gamma[k] * coord_num_[k][j];
    if (s % coord_den_ != 0) throw std::invalid_argument("exponent is not a lattice vector");
    x[j] = s / coord_den_;
    if (x[j] & 1) mask |= std::uint64_t{1} << j;
  }
  for (std::size_t k = 0; k < dim_; ++k) {
    long long s = 0;
    for (std::size_t j = 0; j < r; ++j) s += x[j] * basis_scaled_[j][k];
    if (s != gamma[k]) throw std::invalid_argument("exponent is outside the lattice span");
  }
  return mask;
}

FockState FockState::vacuum(const FockSpace& space) {
  FockState s(space);
  s.add_term(Monomial{}, Eisenstein(1));
  return s;
}

FockState FockState::exponential(const FockSpace& space, const AmbientVec& gamma, const Eisenstein& c) {
  FockState s(space);
  Monomial m;
  m.gamma = space.to_exponent(gamma);
  s.add_term(m, c);
  return s;
}

FockState FockState::oscillator(const FockSpace& space, const std::vector<Eisenstein>& h, int mode) {
  if (mode < 1 || mode > kMaxWeight) throw std::invalid_argument("oscillator: mode out of range");
  if (h.size() != space.dim()) throw std::invalid_argument("oscillator: dimension mismatch");
  FockState s(space);
  for (std::size_t c = 0; c < h.size(); ++c) {
    if (h[c].is_zero()) continue;
    Monomial m;
    m.n_osc = 1;
    m.osc[0] = Osc{static_cast<std::uint8_t>(mode), static_cast<std::uint8_t>(c)};
    s.add_term(m, h[c]);
  }
  return s;
}

FockState FockState::oscillator(const FockSpace& space, const AmbientVec& h, int mode) {
  return oscillator(space, std::vector<Eisenstein>(h.begin(), h.end()), mode);
}

void FockState::add_term(const Monomial& m, const Eisenstein& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Eisenstein FockState::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Eisenstein() : it->second;
}

std::optional<Rational> FockState::weight() const {
  if (terms_.empty()) return Rational(0);
  std::optional<Rational> w;
  for (const auto& [m, c] : terms_) {
    Rational x = space_->weight(m);
    if (w && *w != x) return std::nullopt;
    w = x;
  }
  return w;
}

bool FockState::is_homogeneous(int w) const {
  for (const auto& [m, c] : terms_)
    if (space_->weight(m) != Rational(w)) return false;
  return true;
}

bool FockState::all_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

std::vector<std::pair<Monomial, Eisenstein>> FockState::sorted_terms() const {
  std::vector<std::pair<Monomial, Eisenstein>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

void FockState::bind(const FockState& o) {
  if (!o.space_) return;
  if (!space_) space_ = o.space_;
  if (space_ != o.space_) throw std::invalid_argument("FockState: states live in different spaces");
}

FockState& FockState::operator+=(const FockState& o) {
  bind(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  bind(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FockState& FockState::operator*=(const Eisenstein& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

bool operator==(const FockState& a, const FockState& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [m, c] : a.terms_) {
    auto it = b.terms_.find(m);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

std::string FockState::dump() const {
  std::ostringstream os;
  const std::size_t dim = space_ ? space_->dim() : 0;
  os << "griess-lab-state v1 " << (space_ ? space_->name() : std::string("-")) << ' ' << dim << ' ' << terms_.size() << '\n';
  for (const auto& [m, c] : sorted_terms()) {
    os << c.re().to_string() << ' ' << c.zc().to_string() << " |";
    for (std::size_t i = 0; i < m.n_osc; ++i) os << ' ' << int(m.osc[i].mode) << ':' << int(m.osc[i].dir);
    os << " |";
    for (std::size_t k = 0; k < dim; ++k) os << ' ' << Rational(m.gamma[k], space_->denom()).to_string();
    os << '\n';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FockState& s) { return os << '\n' << s.dump(); }

}  // namespace griess::fock
