#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsa/linalg.hpp"

namespace lsa {

/// Z2 degree of a basis vector, homogeneous element, or homogeneous map.
enum class Parity : int { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

/// (-1)^{|a||b|}: -1 iff both arguments are odd.
constexpr int parity_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

constexpr const char* parity_name(Parity p) {
  return p == Parity::even ? "even" : "odd";
}

/// A finite-dimensional Lie superalgebra given by a graded basis and
/// structure constants: [e_i, e_j] = sum_k c(i,j,k) e_k. Basis order is
/// even vectors first (indices 0..dim_even-1), then odd. The table is stored
/// densely for all (i,j), including i > j, so sign errors are detectable by
/// validate() instead of being silently normalized.
///
/// Instances are filled once by a constructor routine and treated as
/// immutable afterwards; every operation on them is a pure function, so
/// const instances are safe to share across threads.
class LieSuperalgebra {
 public:
  LieSuperalgebra(Index dim_even, Index dim_odd, std::string name);

  Index dim_even() const { return dim_even_; }
  Index dim_odd() const { return dim_odd_; }
  Index dim() const { return dim_even_ + dim_odd_; }
  const std::string& name() const { return name_; }

  Parity parity(Index i) const {
    return i < dim_even_ ? Parity::even : Parity::odd;
  }

  const Rational& c(Index i, Index j, Index k) const { return ad_[i](k, j); }

  /// Matrix of ad(e_i): column j holds the coordinates of [e_i, e_j].
  const RatMatrix& ad(Index i) const { return ad_[i]; }

  /// Coordinates of [e_i, e_j].
  RatVector bracket_basis(Index i, Index j) const { return ad_[i].col(j); }

  /// Sets c(i,j,*); used while building an algebra.
  void set_bracket(Index i, Index j, const RatVector& coords);
  void set_c(Index i, Index j, Index k, const Rational& value);

  /// Sets c(i,j,*) and derives c(j,i,*) by super skew-symmetry.
  void set_bracket_pair(Index i, Index j, const RatVector& coords);

 private:
  Index dim_even_;
  Index dim_odd_;
  std::string name_;
  std::vector<RatMatrix> ad_;
};

/// Element of an algebra in basis coordinates, optionally tagged as
/// homogeneous. A tagged vector has support only in the matching block.
struct AlgebraVector {
  RatVector coords;
  std::optional<Parity> parity;
};

/// Checks the three structural invariants (super skew-symmetry, grading
/// compatibility, super-Jacobi) at every index tuple. Violations are data,
/// not failures; an empty report means the algebra is valid.
std::vector<Violation> validate(const LieSuperalgebra& L);

/// Bilinear extension of the structure constants.
RatVector bracket(const LieSuperalgebra& L, const RatVector& x, const RatVector& y);
AlgebraVector bracket(const LieSuperalgebra& L, const AlgebraVector& x,
                      const AlgebraVector& y);

/// Matrix of the map y -> [x, y].
RatMatrix ad_of(const LieSuperalgebra& L, const RatVector& x);

/// True when v has support only in the coordinate block of parity p.
bool is_homogeneous(const LieSuperalgebra& L, const RatVector& v, Parity p);

/// Block-diagonal sum, basis reordered so even vectors of both summands
/// precede all odd ones. Throws ValidationError if a summand is invalid.
LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b);

/// Quotient by the center on the graded complement spanned by the standard
/// basis vectors at the non-pivot columns of Z(L)'s echelon basis.
struct CenterQuotient {
  LieSuperalgebra algebra;
  /// dim(algebra) x dim(L); maps coordinates in L onto quotient coordinates.
  RatMatrix projection;
  /// Columns of L whose basis vectors represent the quotient basis.
  std::vector<Index> complement_cols;
  Subspace center;
};

CenterQuotient quotient_by_center(const LieSuperalgebra& L);

std::string format_vector(const RatVector& v);

}  // namespace lsa
