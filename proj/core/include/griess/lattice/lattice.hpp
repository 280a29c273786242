#pragma once

#include <optional>
#include <string>
#include <vector>

#include "griess/numerics/matrix.hpp"

namespace griess::lat {

using num::Rational;
using num::RatMatrix;
using AmbientVec = num::Vec<Rational>;

Rational inner(const AmbientVec& a, const AmbientVec& b);
Rational norm(const AmbientVec& a);
AmbientVec add(const AmbientVec& a, const AmbientVec& b);
AmbientVec sub(const AmbientVec& a, const AmbientVec& b);
AmbientVec scale(const Rational& s, const AmbientVec& a);
AmbientVec neg(const AmbientVec& a);
bool is_zero(const AmbientVec& a);

/// Integral lattice given by basis rows in ambient Q^d with the standard inner
/// product. The Gram matrix is derived once at construction.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::string label, RatMatrix basis);

  const std::string& label() const { return label_; }
  std::size_t rank() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const RatMatrix& basis() const { return basis_; }
  const RatMatrix& gram() const { return gram_; }
  AmbientVec basis_vector(std::size_t i) const { return basis_.row_vec(i); }

  Rational det() const;
  bool is_integral() const;
  bool is_even() const;

  /// Coordinates of v in the basis, or nullopt when v is outside the rational span.
  std::optional<num::Vec<Rational>> coordinates(const AmbientVec& v) const;
  bool contains(const AmbientVec& v) const;
  AmbientVec from_coordinates(const num::Vec<Rational>& x) const;

  Lattice relabeled(std::string label) const { return Lattice(std::move(label), basis_); }

 private:
  std::string label_;
  RatMatrix basis_;
  RatMatrix gram_;
  // Right inverse used for coordinate extraction: x = v * pinv_.
  RatMatrix pinv_;
};

// ---- standard constructions -------------------------------------------------

/// A_n = {x in Z^{n+1} : sum x = 0}, basis e_i - e_{i+1}.
Lattice make_A(int n);
/// E8 in the even coordinate model (D8 plus the all-halves glue), with a
/// simple-root basis.
Lattice make_E8();
Lattice make_Z(int n);
/// sqrt(2) L realized rationally as {(v, -v) : v in L} inside Q^{2d}.
Lattice sqrt2_scale(const Lattice& l);
Lattice direct_sum(const Lattice& a, const Lattice& b, std::string label = {});
/// Kronecker product of ambient coordinates: <a(x)b, a'(x)b'> = <a,a'><b,b'>.
Lattice tensor_product(const Lattice& a, const Lattice& b, std::string label = {});
/// Lattice spanned by the given ambient vectors (rows must be independent).
Lattice from_vectors(std::string label, const std::vector<AmbientVec>& rows);
/// Lattice generated by arbitrary (possibly dependent) integral combinations
/// of rows of a lattice; returns a basis via integer row reduction.
Lattice sum_of(std::string label, const std::vector<const Lattice*>& parts);

/// Name-based front end: "A<n>", "E8", "Z<n>", "sqrt2E8".
Lattice build_standard(const std::string& name);

// ---- sublattices -------------------------------------------------------------

/// {beta in l : <beta, s> = 0 for all s in sub}.
Lattice annihilator(const Lattice& l, const Lattice& sub, std::string label = {});

struct KSublattice {
  Lattice lattice;
  int index = 1;  // 1 when a pairs into 3Z with all of E8
};
/// {beta in e8 : <beta, a> in 3Z}.
KSublattice sublattice_K(const Lattice& e8, const AmbientVec& a);

/// Integer left kernel of an integer matrix (rows = generators): a basis of
/// {x in Z^r : x A = 0}. Exposed for tests.
std::vector<std::vector<mpz_class>> integer_left_kernel(const std::vector<std::vector<mpz_class>>& a);

/// Integer row-reduced basis for the Z-span of the given integral rows.
std::vector<std::vector<mpz_class>> integer_row_basis(std::vector<std::vector<mpz_class>> rows);

/// Exact square root of a perfect-square nonnegative rational.
std::optional<Rational> exact_sqrt(const Rational& q);

}  // namespace griess::lat
