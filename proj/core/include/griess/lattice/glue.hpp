#pragma once

#include <vector>

#include "griess/lattice/lattice.hpp"

namespace griess::lat {

/// Standard representative of class i in A_l^* / A_l:
/// (1/(l+1)) (i, ..., i, -(l+1-i), ..., -(l+1-i)) with l+1-i leading entries.
AmbientVec glue_vector(int l, int i);

/// Coordinate maps between Z^{n+1}, Z^{k+1} and Z^{(n+1)(k+1)}:
///   eta_i(e_j) = e_{(n+1)(i-1)+j},  iota_i(e_j) = e_{(n+1)(j-1)+i},
///   d = sum_i eta_i,  mu = sum_i iota_i.
/// Indices are 1-based as in the formulas.
class EmbeddingMaps {
 public:
  EmbeddingMaps(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t ambient_dim() const { return static_cast<std::size_t>((n_ + 1) * (k_ + 1)); }

  AmbientVec eta(int i, const AmbientVec& x) const;   // x in Q^{n+1}, 1 <= i <= k+1
  AmbientVec iota(int i, const AmbientVec& x) const;  // x in Q^{k+1}, 1 <= i <= n+1
  AmbientVec d(const AmbientVec& x) const;
  AmbientVec mu(const AmbientVec& x) const;

  Lattice image_eta(int i, const Lattice& l) const;
  Lattice image_d(const Lattice& l) const;
  Lattice image_mu(const Lattice& l) const;

 private:
  int n_, k_;
};

struct CosetSystem {
  Lattice super;
  Lattice sub;
  std::vector<AmbientVec> representatives;
  /// sqrt(det(sub) / det(super)).
  Rational index;
  bool pairwise_incongruent = false;
  bool all_in_super = false;
};

/// 81 representatives -(1/9)(i mu(a1) + j mu(a2)) + nu1(g(i)) + nu2(g(j)) of
/// A26 modulo Y + A8^3, where Y = mu(A2), nu1 = eta_1 - eta_2,
/// nu2 = eta_2 - eta_3 and g = glue_vector(8, .). Ordered by (i, j).
CosetSystem coset_decomposition_A26();

/// True when the given vectors are pairwise incongruent modulo `sub`.
bool pairwise_incongruent(const Lattice& sub, const std::vector<AmbientVec>& reps);

}  // namespace griess::lat
