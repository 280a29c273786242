#pragma once

#include <vector>

#include "griess/lattice/lattice.hpp"
#include "griess/lattice/roots.hpp"
#include "griess/lattice/shell.hpp"

namespace griess::lat {

/// (x, y, z) in Q^24 from three vectors of Q^8.
AmbientVec block3(const AmbientVec& x, const AmbientVec& y, const AmbientVec& z);
/// The i-th block embedding Q^8 -> Q^24, i in {0,1,2}.
AmbientVec eta(int i, const AmbientVec& x);

/// First vector a of E8, scanning the norm 2, 4, 6, 8 shells in lexicographic
/// order, for which {beta : <beta,a> in 3Z} has exactly 72 roots of type A8.
/// The shells of norm 2, 4 and 6 give 126, 84 and 78 roots, so the result
/// always has norm 8.
AmbientVec find_a(const Lattice& e8, const ShellCache* cache = nullptr);

/// Residue of an integral rational modulo 3, in {0, 1, 2}.
int mod3(const Rational& x);

/// The lattice data living in E8^3: the three diagonal copies of sqrt2 E8,
/// their sum, the diagonal E, and the A8 sublattice K of E8 cut out by a.
struct E8Cube {
  Lattice e8;
  Lattice L;   // E8^3
  Lattice M;   // {(x,-x,0)}
  Lattice N;   // {(0,x,-x)}
  Lattice Nt;  // {(x,0,-x)}
  Lattice MN;  // M + N
  Lattice E;   // {(x,x,x)}
  AmbientVec a;
  Lattice K;
  std::vector<AmbientVec> roots;    // E8(2)
  std::vector<AmbientVec> k_roots;  // <beta,a> = 0 mod 3
  std::vector<AmbientVec> delta1;   // <beta,a> = 1 mod 3
  std::vector<AmbientVec> delta2;   // <beta,a> = 2 mod 3
  AmbientVec b;                     // first root of delta1
};

E8Cube build_e8_cube(const ShellCache* cache = nullptr);

}  // namespace griess::lat
