#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "griess/cocycle/cocycle.hpp"
#include "griess/lattice/lattice.hpp"
#include "griess/numerics/eisenstein.hpp"

namespace griess::fock {

using lat::AmbientVec;
using lat::Lattice;
using num::Eisenstein;
using num::Rational;

inline constexpr std::size_t kMaxDim = 32;
inline constexpr int kMaxWeight = 2;

/// epsilon_dir(-mode) for a coordinate direction of the ambient frame.
struct Osc {
  std::uint8_t mode = 0;
  std::uint8_t dir = 0;
  auto operator<=>(const Osc&) const = default;
};

using Exponent = std::array<std::int8_t, kMaxDim>;

/// (prod epsilon_{dir_i}(-mode_i)) (x) e^gamma with at most two oscillators.
/// gamma is stored scaled by the space denominator.
struct Monomial {
  Exponent gamma{};
  std::uint8_t n_osc = 0;
  std::array<Osc, 2> osc{};

  int osc_weight() const;
  bool has_exponent() const;
  void sort_osc();

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.gamma == b.gamma && a.n_osc == b.n_osc && a.osc == b.osc;
  }
  friend bool operator<(const Monomial& a, const Monomial& b);
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// The lattice vertex algebra V_L up to weight 2: ambient frame, exponent
/// scale and the sign cocycle.
class FockSpace {
 public:
  FockSpace(Lattice lattice, std::string name);

  const std::string& name() const { return name_; }
  const Lattice& lattice() const { return lattice_; }
  const cocycle::CocycleTable& cocycle() const { return cocycle_; }
  std::size_t dim() const { return dim_; }
  /// Exponent coordinates are multiples of 1/denom().
  int denom() const { return denom_; }

  Exponent to_exponent(const AmbientVec& gamma) const;
  AmbientVec to_ambient(const Exponent& gamma) const;
  /// D^2 <a,b> as an integer, D = denom().
  int scaled_inner(const Exponent& a, const Exponent& b) const;
  Rational inner(const Exponent& a, const Exponent& b) const;
  Rational weight(const Monomial& m) const;
  std::uint64_t parity_mask(const Exponent& gamma) const;

 private:
  std::string name_;
  Lattice lattice_;
  cocycle::CocycleTable cocycle_;
  std::size_t dim_ = 0;
  int denom_ = 1;
  // coordinates(gamma) = (scaled gamma) * coord_num_ / coord_den_
  std::vector<std::vector<long long>> coord_num_;
  long long coord_den_ = 1;
  std::vector<std::vector<long long>> basis_scaled_;  // basis * denom
};

/// Sparse Q(zeta)-combination of monomials. Terms with zero coefficient are
/// never stored.
class FockState {
 public:
  using Map = std::unordered_map<Monomial, Eisenstein, MonomialHash>;

  FockState() = default;
  explicit FockState(const FockSpace& space) : space_(&space) {}

  static FockState vacuum(const FockSpace& space);
  static FockState exponential(const FockSpace& space, const AmbientVec& gamma, const Eisenstein& c = Eisenstein(1));
  /// h(-mode) 1 for an ambient direction h with field coefficients.
  static FockState oscillator(const FockSpace& space, const std::vector<Eisenstein>& h, int mode);
  static FockState oscillator(const FockSpace& space, const AmbientVec& h, int mode);

  const FockSpace& space() const { return *space_; }
  bool has_space() const { return space_ != nullptr; }
  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Eisenstein& c);
  Eisenstein coefficient(const Monomial& m) const;

  /// Common weight of all terms; nullopt when mixed. The zero state reports 0.
  std::optional<Rational> weight() const;
  bool is_homogeneous(int w) const;
  bool all_rational() const;

  /// Terms in canonical order.
  std::vector<std::pair<Monomial, Eisenstein>> sorted_terms() const;

  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  FockState& operator*=(const Eisenstein& c);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(const Eisenstein& c, FockState a) { return a *= c; }
  friend FockState operator*(const Rational& c, FockState a) { return a *= Eisenstein(c); }
  friend bool operator==(const FockState& a, const FockState& b);
  friend bool operator!=(const FockState& a, const FockState& b) { return !(a == b); }

  /// Header "griess-lab-state v1 <space> <dim> <terms>", then one line per
  /// term in canonical order: "re zc | mode:dir ... | gamma" with gamma in
  /// ambient rational coordinates.
  std::string dump() const;

 private:
  void bind(const FockState& o);

  const FockSpace* space_ = nullptr;
  Map terms_;
};

std::ostream& operator<<(std::ostream& os, const FockState& s);

}  // namespace griess::fock
