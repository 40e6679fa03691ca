#pragma once

#include <string>
#include <vector>

#include "lsa/invariants.hpp"
#include "lsa/superalgebra.hpp"

namespace lsa {

/// Homogeneous linear map of degree tau on a graded algebra, as a matrix
/// acting on basis coordinates: f(e_c) = sum_r matrix(r,c) e_r. Degree means
/// f(L_p) is contained in L_{p+tau}, i.e. only blocks with
/// parity(r) = parity(c) + tau may be nonzero.
struct GradedLinearMap {
  RatMatrix matrix;
  Parity degree = Parity::even;
};

enum class MapKind { derivation, centroid, commuting };
const char* map_kind_name(MapKind kind);

/// Solution space of one defining identity at one degree. The span holds the
/// row-major vectorized matrices as a canonical echelon basis in the full
/// dim^2 ambient space; basis[i] is the matrix form of span row i.
struct MapSpace {
  Parity degree = Parity::even;
  MapKind kind = MapKind::derivation;
  std::vector<GradedLinearMap> basis;
  Subspace span = Subspace::zero(0);

  Index dim() const { return static_cast<Index>(basis.size()); }
};

/// Block-pattern check: entries outside the degree-allowed blocks must be 0.
std::vector<Violation> check_map_grading(const LieSuperalgebra& L,
                                         const GradedLinearMap& f);

/// D([e_i,e_j]) = [D(e_i),e_j] + (-1)^{|D| p_i} [e_i, D(e_j)] at all pairs.
std::vector<Violation> check_derivation(const LieSuperalgebra& L,
                                        const GradedLinearMap& d);

/// g([e_i,e_j]) = (-1)^{|g| p_i} [e_i, g(e_j)] at all pairs.
std::vector<Violation> check_centroid(const LieSuperalgebra& L,
                                      const GradedLinearMap& g);

/// [f(e_i), e_j] = [e_i, f(e_j)] at all pairs; f must be even.
std::vector<Violation> check_commuting(const LieSuperalgebra& L,
                                       const GradedLinearMap& f);

MapSpace derivation_space(const LieSuperalgebra& L, Parity tau);
MapSpace centroid_space(const LieSuperalgebra& L, Parity tau);
MapSpace commuting_map_space(const LieSuperalgebra& L);

/// The identity map as an even graded map (always in the even centroid).
GradedLinearMap identity_map(const LieSuperalgebra& L);

/// Outcome of one machine-checked statement on one concrete algebra.
struct TheoremCertificate {
  std::string statement;
  bool passed = false;
  std::vector<Violation> violations;
};

/// For perfect L with trivial centralizer of the derived algebra: every
/// commuting map lies in the even centroid. Each commuting basis map is
/// re-checked against the centroid identity, and the supporting double-
/// bracket identity [[e_w,e_z],[e_u, f([e_x,e_y]) - [e_x,f(e_y)]]] = 0 is
/// verified over all basis 5-tuples. Throws PreconditionError (naming the
/// failed flag) when the hypotheses do not hold.
TheoremCertificate verify_commuting_in_centroid(const LieSuperalgebra& L);

}  // namespace lsa
