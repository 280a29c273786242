#include "griess/cocycle/cocycle.hpp"

#include <bit>
#include <stdexcept>

namespace griess::cocycle {
namespace {

int parity(const lat::Rational& x) {
  mpz_class n = x.numerator();
  return mpz_odd_p(n.get_mpz_t()) ? 1 : 0;
}

}  // namespace

CocycleTable CocycleTable::build_epsilon0(const Lattice& l) {
  if (!l.is_even()) throw std::invalid_argument("build_epsilon0: lattice '" + l.label() + "' is not even");
  if (l.rank() > 64) throw std::invalid_argument("build_epsilon0: rank above 64");
  CocycleTable t;
  t.lattice_ = l;
  t.rows_.assign(l.rank(), 0);
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (parity(l.gram()(i, i) / lat::Rational(2))) t.rows_[i] |= std::uint64_t{1} << i;
    for (std::size_t j = i + 1; j < l.rank(); ++j)
      if (parity(l.gram()(i, j))) t.rows_[i] |= std::uint64_t{1} << j;
  }
  return t;
}

std::uint64_t CocycleTable::parity_mask(const AmbientVec& v) const {
  auto x = lattice_.coordinates(v);
  if (!x) throw std::invalid_argument("epsilon: vector outside the lattice span");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < x->size(); ++i) {
    if (!(*x)[i].is_integer()) throw std::invalid_argument("epsilon: vector not in the lattice");
    if (parity((*x)[i])) m |= std::uint64_t{1} << i;
  }
  return m;
}

int CocycleTable::epsilon_masks(std::uint64_t x, std::uint64_t y) const {
  int s = 0;
  while (x) {
    int i = std::countr_zero(x);
    x &= x - 1;
    s ^= std::popcount(rows_[static_cast<std::size_t>(i)] & y) & 1;
  }
  return s;
}

int CocycleTable::epsilon(const AmbientVec& g, const AmbientVec& d) const {
  return epsilon_masks(parity_mask(g), parity_mask(d));
}

bool CocycleTable::is_trivial_on(const Lattice& s) const {
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < s.rank(); ++i) masks.push_back(parity_mask(s.basis_vector(i)));
  for (auto a : masks)
    for (auto b : masks)
      if (epsilon_masks(a, b)) return false;
  return true;
}

}  // namespace griess::cocycle
