#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "griess/fock/modes.hpp"
#include "griess/lattice/e8_cube.hpp"

namespace griess::fock {

/// omega_S = 1/2 sum_i b_i(-1) b^i(-1) 1 over a basis {b_i} of the rational
/// span of `rows` and its dual basis, expanded in the ambient frame.
FockState virasoro_of_subspace(const FockSpace& space, const std::vector<AmbientVec>& rows);
FockState virasoro_of_subspace(const FockSpace& space, const Lattice& s);

/// (1/16) omega_S + (1/32) sum over the 240 norm-4 vectors of S. Throws when
/// S has roots or the norm-4 shell is not of size 240.
FockState ising_of_sqrt2E8(const FockSpace& space, const Lattice& s, const lat::ShellCache* cache = nullptr);

/// Multiplies every e^gamma term by zeta^{k <v, gamma> mod 3}; <v, gamma> must be integral.
FockState phase_twist(const AmbientVec& v, int k, const FockState& s);
/// phase_twist with v = (a, -a, 0).
FockState rho_twist(const AmbientVec& a, int k, const FockState& s);

/// (-1)^{#oscillators} and gamma -> -gamma.
FockState theta(const FockState& s);

/// (x, y, z) -> (z, x, y) applied `shift` times to directions and exponents of
/// a 24-dimensional state; the sign cocycle is blockwise, so this is an automorphism.
FockState permute_blocks(const FockState& s, int shift = 1);

/// Complex conjugation of the coefficients.
FockState conjugate(const FockState& s);

/// Coefficients c with sum_i c_i basis_i = s exactly, or nullopt when s is
/// outside the span.
std::optional<std::vector<Eisenstein>> express_in_span(const std::vector<FockState>& basis, const FockState& s);

/// The lattice VOA of E8^3 with its named sublattices.
struct CubeContext {
  lat::E8Cube cube;
  std::unique_ptr<FockSpace> space;
  const lat::ShellCache* cache = nullptr;
};

std::shared_ptr<const CubeContext> make_cube_context(const lat::ShellCache* cache = nullptr);

/// e^{i,j} = rho^i (permute_blocks^j e_M).
struct AxisFamily {
  std::shared_ptr<const CubeContext> ctx;
  std::array<std::array<FockState, 3>, 3> e;

  const FockState& at(int i, int j) const { return e[i][j]; }
};

AxisFamily build_axis_family(std::shared_ptr<const CubeContext> ctx);

/// E_alpha = sum_i e^{eta_i(alpha)}, H_alpha = (alpha, alpha, alpha)(-1) 1.
FockState e_alpha(const CubeContext& ctx, const AmbientVec& alpha);
FockState h_alpha(const CubeContext& ctx, const AmbientVec& alpha);

/// Omega from the level-3 Sugawara construction over K(2):
/// (1/24) [6 omega_E + sum_alpha (E_alpha)_{-1}(-E_{-alpha})].
FockState sugawara_omega(const CubeContext& ctx);
/// omega_E + (3/4) omega_{M+N} - (1/12) sum of e^{eta_i(alpha) - eta_j(alpha)},
/// one term per distinct exponent (alpha in K(2), i != j).
FockState sugawara_by_lattice(const CubeContext& ctx);
/// omega_L - (8/9) sum_{i,j} e^{i,j}.
FockState sugawara_by_axes(const AxisFamily& f);

struct CommutantFailure {
  std::string op;  // "H0", "H1", "E0", "E1"
  AmbientVec alpha;
  int i = 0, j = 0;
};

struct CommutantReport {
  long checks = 0;
  std::vector<CommutantFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// (H_alpha)_n e^{i,j} and (E_alpha)_n e^{i,j} for n = 0, 1, alpha in K(2).
CommutantReport check_commutant_annihilation(const AxisFamily& f);

/// X^0, X^1, X^2: rho-eigencomponents of e_M for eigenvalues 1, zeta^2, zeta.
struct RealForm {
  FockState x0, x1, x2;
};

RealForm real_form_components(const AxisFamily& f);
/// (1/32) sum of e^gamma over norm-4 gamma in sign*(b, -b, 0) + K~.
FockState coset_sum(const CubeContext& ctx, int sign);

/// The level-k sl2 parafermion Virasoro vector inside V_{A26} for an A2 root
/// alpha (k = 9 via the diagonal map mu):
///   (1/(2k(k+2))) (s k h(-2) - h(-1)^2 + 2k x_alpha(-1) x_{-alpha}(-1)) 1
/// with h = mu(alpha), x_alpha = sum_j e^{iota_j alpha}, x_{-alpha} = -E_{-alpha}.
struct ParafermionSpace {
  std::unique_ptr<FockSpace> space;
  lat::Lattice a26;
};

std::shared_ptr<const ParafermionSpace> make_parafermion_space();
FockState parafermion_omega(const ParafermionSpace& ps, const AmbientVec& alpha, int h2_sign);

}  // namespace griess::fock
