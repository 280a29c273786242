#pragma once

#include <vector>

#include "griess/fock/state.hpp"

namespace griess::fock {

struct ModeOptions {
  /// Use the per-bucket closed form e^b_n e^g = +-S_k(b) e^{b+g},
  /// k = -n-1-<b,g>, for pairs of pure exponentials.
  bool closed_form_exponentials = true;
};

/// u_n v, computed from the normally ordered vertex operator
///   Y(prod h_i(-n_i) e^b, z) = :prod d^{(n_i-1)} h_i(z) E^-(-b,z) E^+(-b,z) e_b z^{b(0)}:
/// keeping only output weight wt u + wt v - n - 1. Throws std::domain_error
/// when a contributing pair would land above weight 2.
FockState mode(const FockState& u, int n, const FockState& v, const ModeOptions& opts = {});

/// h(m) acting on s: contraction for m > 0, <h, gamma> for m = 0, creation for m < 0.
FockState heisenberg_mode(const std::vector<Eisenstein>& h, int m, const FockState& s);
FockState heisenberg_mode(const AmbientVec& h, int m, const FockState& s);

/// (e^beta)_n s.
FockState exp_mode(const AmbientVec& beta, int n, const FockState& s, const ModeOptions& opts = {});

/// a_1 b for weight-2 states.
FockState griess_product(const FockState& a, const FockState& b, const ModeOptions& opts = {});

/// Vacuum coefficient of a_3 b for weight-2 states.
Eisenstein invariant_form(const FockState& a, const FockState& b);

/// The translation operator L(-1).
FockState l_minus_one(const FockState& s);

}  // namespace griess::fock
