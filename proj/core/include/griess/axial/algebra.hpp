#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "griess/numerics/matrix.hpp"

namespace griess::axial {

using num::RatMatrix;
using num::Rational;
using Vec = num::Vec<Rational>;

/// Finite-dimensional commutative algebra given by structure constants
/// b_i . b_j = sum_k c[i][j][k] b_k and a bilinear form on the basis.
struct StructureAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<Vec>> table;  // table[i][j][k]
  RatMatrix gram;

  StructureAlgebra() = default;
  explicit StructureAlgebra(std::size_t n, std::vector<std::string> names = {});

  Vec basis(std::size_t i) const;
  Vec product(const Vec& x, const Vec& y) const;
  Rational form(const Vec& x, const Vec& y) const;

  bool is_commutative() const;
  bool is_form_symmetric() const;
  /// <b_i . b_j, b_k> = <b_i, b_j . b_k> on all basis triples.
  bool is_form_associative() const;
};

/// The 3C algebra on three Ising vectors.
StructureAlgebra build_3C();
/// The nine-dimensional algebra spanned by e^{i,j}; basis index 3i + j.
StructureAlgebra build_G9();
inline std::size_t g9_index(int i, int j) { return static_cast<std::size_t>(3 * (((i % 3) + 3) % 3) + (((j % 3) + 3) % 3)); }

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& a);
bool is_zero(const Vec& v);

/// c = 2<v,v> when v.v = 2v, otherwise nullopt.
std::optional<Rational> certify_virasoro(const StructureAlgebra& a, const Vec& v);

/// Matrix of x -> v.x acting on coordinate columns.
RatMatrix adjoint(const StructureAlgebra& a, const Vec& v);

/// Eigenspace dimensions of adjoint(v) for the listed eigenvalues.
std::map<Rational, std::size_t> eigen_dimensions(const StructureAlgebra& a, const Vec& v, const std::vector<Rational>& values);

/// Griess-level axis certificate: idempotent, c = 1/2, adjoint spectrum in {2, 0, 1/2, 1/16}.
struct AxisCertificate {
  bool idempotent = false;
  Rational central_charge;
  std::map<Rational, std::size_t> spectrum;
  bool exhausted = false;
  bool ok() const { return idempotent && central_charge == Rational(1, 2) && exhausted; }
};

AxisCertificate certify_axis(const StructureAlgebra& a, const Vec& e);

struct LinearEndo {
  RatMatrix matrix;
  bool automorphism = false;

  Vec apply(const Vec& x) const { return matrix * x; }
};

/// Product- and form-preservation on all basis pairs.
bool is_automorphism(const StructureAlgebra& a, const RatMatrix& m);

/// -1 on the 1/16-eigenspace of adjoint(e), +1 on the 2, 0, 1/2 parts.
/// Throws std::domain_error when e is not an axis or the eigenspaces do not exhaust.
LinearEndo miyamoto_tau(const StructureAlgebra& a, const Vec& e);

/// sigma_e on the tau_e-fixed subalgebra, in the basis `fixed_basis` of that subalgebra.
struct RestrictedEndo {
  std::vector<Vec> fixed_basis;
  RatMatrix matrix;  // acts on coordinates w.r.t. fixed_basis
  bool automorphism = false;
  bool is_identity() const;
};

RestrictedEndo miyamoto_sigma(const StructureAlgebra& a, const Vec& e);

struct MatrixGroup {
  std::vector<RatMatrix> elements;  // elements[0] is the identity
  std::size_t order() const { return elements.size(); }
  std::vector<std::size_t> involutions() const;
  std::size_t element_order(std::size_t idx) const;
  /// Elements whose order divides 3.
  std::vector<std::size_t> three_part() const;
  bool is_normal_subgroup(const std::vector<std::size_t>& subset) const;
  bool all_conjugate(const std::vector<std::size_t>& subset) const;
  std::size_t index_of(const RatMatrix& m) const;  // order() when absent
};

/// Breadth-first closure; throws std::length_error past `bound` elements.
MatrixGroup group_closure(const std::vector<LinearEndo>& gens, std::size_t bound = 10000);

struct GroupShape {
  std::size_t order = 0;
  std::size_t involutions = 0;
  bool involutions_conjugate = false;
  std::size_t o3_order = 0;
  bool o3_normal = false;
  bool o3_elementary = false;  // every non-identity element of order 3
  std::size_t quotient_order = 0;
  bool is_3squared_2() const {
    return order == 18 && o3_order == 9 && o3_normal && o3_elementary && quotient_order == 2 && involutions == 9 &&
           involutions_conjugate;
  }
};

GroupShape analyse_shape(const MatrixGroup& g);

/// Simultaneous eigenvalues of x -> f.v for the frame elements f.
std::optional<std::vector<Rational>> highest_weight_check(const StructureAlgebra& a, const Vec& v,
                                                          const std::vector<Vec>& frame);

/// True iff b_i -> b'_{map[i]} carries table and gram of A onto those of B.
bool isomorphism_check(const StructureAlgebra& a, const StructureAlgebra& b, const std::vector<std::size_t>& map);

/// The frame e^{0,0}, a^1, b^1 and the vectors a^1..a^4 of the nine-dimensional algebra.
struct G9Elements {
  Vec omega;
  std::array<Vec, 4> a;
  Vec b1;
};

G9Elements g9_elements();

struct LieType {
  std::string name;
  int rank;
  int dim;
  int dual_coxeter;
};

/// "slN" (N >= 2), "E6", "E7", "E8"; throws std::invalid_argument otherwise.
LieType lie_type(const std::string& name);
Rational affine_central_charge(const LieType& g, int k);
Rational parafermion_central_charge(const LieType& g, int k);

/// Text form "griess-lab-alg v1 <dim>", "label i name", "i j k c", "gram i j value".
std::string serialize_algebra(const StructureAlgebra& a);
std::optional<StructureAlgebra> parse_algebra(const std::string& text);

}  // namespace griess::axial
