#include "griess/lattice/glue.hpp"

#include <set>
#include <stdexcept>

namespace griess::lat {

AmbientVec glue_vector(int l, int i) {
  if (l < 1 || i < 0 || i > l) throw std::out_of_range("glue_vector: index out of range");
  AmbientVec v(static_cast<std::size_t>(l + 1));
  for (int k = 0; k <= l; ++k) v[k] = k < l + 1 - i ? Rational(i, l + 1) : Rational(-(l + 1 - i), l + 1);
  return v;
}

EmbeddingMaps::EmbeddingMaps(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw std::invalid_argument("EmbeddingMaps: n and k must be >= 1");
}

AmbientVec EmbeddingMaps::eta(int i, const AmbientVec& x) const {
  if (i < 1 || i > k_ + 1 || x.size() != static_cast<std::size_t>(n_ + 1))
    throw std::invalid_argument("eta: bad index or dimension");
  AmbientVec v(ambient_dim());
  for (int j = 1; j <= n_ + 1; ++j) v[(n_ + 1) * (i - 1) + j - 1] = x[j - 1];
  return v;
}

AmbientVec EmbeddingMaps::iota(int i, const AmbientVec& x) const {
  if (i < 1 || i > n_ + 1 || x.size() != static_cast<std::size_t>(k_ + 1))
    throw std::invalid_argument("iota: bad index or dimension");
  AmbientVec v(ambient_dim());
  for (int j = 1; j <= k_ + 1; ++j) v[(n_ + 1) * (j - 1) + i - 1] = x[j - 1];
  return v;
}

AmbientVec EmbeddingMaps::d(const AmbientVec& x) const {
  AmbientVec v(ambient_dim());
  for (int i = 1; i <= k_ + 1; ++i) v = add(v, eta(i, x));
  return v;
}

AmbientVec EmbeddingMaps::mu(const AmbientVec& x) const {
  AmbientVec v(ambient_dim());
  for (int i = 1; i <= n_ + 1; ++i) v = add(v, iota(i, x));
  return v;
}

namespace {

template <typename F>
Lattice image(const Lattice& l, std::string label, F f) {
  std::vector<AmbientVec> rows;
  for (std::size_t i = 0; i < l.rank(); ++i) rows.push_back(f(l.basis_vector(i)));
  return from_vectors(std::move(label), rows);
}

}  // namespace

Lattice EmbeddingMaps::image_eta(int i, const Lattice& l) const {
  return image(l, "eta" + std::to_string(i) + "(" + l.label() + ")", [&](const AmbientVec& x) { return eta(i, x); });
}

Lattice EmbeddingMaps::image_d(const Lattice& l) const {
  return image(l, "d(" + l.label() + ")", [&](const AmbientVec& x) { return d(x); });
}

Lattice EmbeddingMaps::image_mu(const Lattice& l) const {
  return image(l, "mu(" + l.label() + ")", [&](const AmbientVec& x) { return mu(x); });
}

bool pairwise_incongruent(const Lattice& sub, const std::vector<AmbientVec>& reps) {
  // Two vectors are congruent iff their coordinates agree modulo Z.
  std::set<std::vector<Rational>> classes;
  for (const auto& r : reps) {
    auto x = sub.coordinates(r);
    if (!x) throw std::invalid_argument("pairwise_incongruent: vector outside the span of the sublattice");
    for (auto& c : *x) c -= Rational(mpz_class(c.floor()));
    if (!classes.insert(*x).second) return false;
  }
  return true;
}

CosetSystem coset_decomposition_A26() {
  const EmbeddingMaps maps(8, 2);
  const Lattice a2 = make_A(2);
  const Lattice a8 = make_A(8);
  CosetSystem cs;
  cs.super = make_A(26);
  Lattice y = maps.image_mu(a2).relabeled("Y");
  Lattice b1 = maps.image_eta(1, a8), b2 = maps.image_eta(2, a8), b3 = maps.image_eta(3, a8);
  cs.sub = sum_of("Y+A8^3", {&y, &b1, &b2, &b3});
  const AmbientVec mu1 = maps.mu(a2.basis_vector(0));
  const AmbientVec mu2 = maps.mu(a2.basis_vector(1));
  auto nu1 = [&](const AmbientVec& x) { return sub(maps.eta(1, x), maps.eta(2, x)); };
  auto nu2 = [&](const AmbientVec& x) { return sub(maps.eta(2, x), maps.eta(3, x)); };
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      AmbientVec r = scale(Rational(-1, 9), add(scale(Rational(i), mu1), scale(Rational(j), mu2)));
      r = add(r, nu1(glue_vector(8, i)));
      r = add(r, nu2(glue_vector(8, j)));
      cs.representatives.push_back(std::move(r));
    }
  auto idx = exact_sqrt(cs.sub.det() / cs.super.det());
  if (!idx) throw std::runtime_error("coset_decomposition_A26: index is not a perfect square ratio");
  cs.index = *idx;
  cs.all_in_super = true;
  for (const auto& r : cs.representatives) cs.all_in_super = cs.all_in_super && cs.super.contains(r);
  cs.pairwise_incongruent = pairwise_incongruent(cs.sub, cs.representatives);
  return cs;
}

}  // namespace griess::lat
