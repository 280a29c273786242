#pragma once

#include <cstdint>
#include <vector>

#include "griess/lattice/lattice.hpp"

namespace griess::cocycle {

using lat::AmbientVec;
using lat::Lattice;

/// Bilinear 2-cocycle with values in Z/2 on an even lattice, stored as a
/// bit table on a fixed ordered basis:
///   eps(b_i, b_j) = <b_i,b_j> mod 2 for i < j, <b_i,b_i>/2 mod 2 for i = j,
///   0 for i > j.
/// Then eps(a,a) = <a,a>/2 and eps(a,b) + eps(b,a) = <a,b> mod 2.
class CocycleTable {
 public:
  static CocycleTable build_epsilon0(const Lattice& l);

  const Lattice& lattice() const { return lattice_; }
  std::size_t rank() const { return rows_.size(); }
  int bit(std::size_t i, std::size_t j) const { return static_cast<int>((rows_[i] >> j) & 1U); }

  /// Coordinates mod 2 in the table basis, packed into a bit mask.
  /// Throws std::invalid_argument for vectors outside the lattice.
  std::uint64_t parity_mask(const AmbientVec& v) const;
  int epsilon_masks(std::uint64_t x, std::uint64_t y) const;
  int epsilon(const AmbientVec& g, const AmbientVec& d) const;

  /// eps vanishes on every pair of basis vectors of s (hence on s x s).
  bool is_trivial_on(const Lattice& s) const;

 private:
  Lattice lattice_;
  std::vector<std::uint64_t> rows_;
};

}  // namespace griess::cocycle
