#include "lsa/invariants.hpp"
#include "lsa/superalgebra.hpp"

namespace lsa {

CenterQuotient quotient_by_center(const LieSuperalgebra& L) {
  const Index n = L.dim();
  Subspace Z = center(L);

  std::vector<bool> is_pivot(n, false);
  for (Index c : Z.pivot_cols()) is_pivot[c] = true;
  std::vector<Index> complement;
  for (Index c = 0; c < n; ++c)
    if (!is_pivot[c]) complement.push_back(c);

  // Complement columns are ascending, so even ones come first and the
  // quotient basis inherits the even-first ordering.
  Index even_count = 0;
  for (Index c : complement)
    if (L.parity(c) == Parity::even) ++even_count;
  const Index nbar = static_cast<Index>(complement.size());

  // pi(v): eliminate the pivot coordinates against Z's rows, then read off
  // the complement coordinates. Center vectors map to zero by construction.
  RatMatrix projection(nbar, n);
  for (Index j = 0; j < n; ++j) {
    const RatVector w = Z.reduce(RatVector(RatVector::Unit(n, j)));
    for (Index a = 0; a < nbar; ++a) projection(a, j) = w(complement[a]);
  }

  LieSuperalgebra quotient(even_count, nbar - even_count, L.name() + "/Z");
  for (Index a = 0; a < nbar; ++a)
    for (Index b = 0; b < nbar; ++b)
      quotient.set_bracket(a, b,
                           RatVector(projection *
                                     L.bracket_basis(complement[a], complement[b])));

  auto report = validate(quotient);
  if (!report.empty()) throw ValidationError(std::move(report));
  return CenterQuotient{std::move(quotient), std::move(projection),
                        std::move(complement), std::move(Z)};
}

}  // namespace lsa
