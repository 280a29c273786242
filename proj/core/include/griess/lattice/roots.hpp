#pragma once

#include <string>
#include <vector>

#include "griess/lattice/lattice.hpp"
#include "griess/lattice/shell.hpp"

namespace griess::lat {

struct RootSystemInfo {
  bool has_roots = false;
  /// True when the norm-2 vectors generate the whole lattice.
  bool spans = false;
  std::size_t root_count = 0;
  std::vector<AmbientVec> simple_roots;
  RatMatrix cartan;
  /// Components joined by '+', e.g. "A8" or "A2+E6"; "no roots" when the
  /// lattice has no norm-2 vectors.
  std::string type;

  /// type when the roots span, otherwise "not simply-laced root lattice".
  std::string label() const;
};

/// Positive roots are those whose first nonzero ambient coordinate is
/// positive; simple roots are positive roots that are not a sum of two
/// positive roots.
RootSystemInfo root_system_type(const Lattice& l, const ShellCache* cache = nullptr);
RootSystemInfo root_system_type_from_roots(const Lattice& l, const std::vector<AmbientVec>& roots);

/// ADE label of a connected simply-laced Cartan matrix; empty if unrecognized.
std::string ade_label(const RatMatrix& cartan);

}  // namespace griess::lat
