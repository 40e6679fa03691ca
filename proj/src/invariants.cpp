#include "lsa/invariants.hpp"

namespace lsa {

Subspace derived_algebra(const LieSuperalgebra& L) {
  const Index n = L.dim();
  RatMatrix rows(n * n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) rows.row(i * n + j) = L.bracket_basis(i, j).transpose();
  return Subspace(n, rows);
}

Subspace center(const LieSuperalgebra& L) {
  const Index n = L.dim();
  RatMatrix stacked(n * n, n);
  for (Index i = 0; i < n; ++i) stacked.middleRows(i * n, n) = L.ad(i);
  return nullspace(stacked);
}

Subspace centralizer(const LieSuperalgebra& L, const Subspace& S) {
  const Index n = L.dim();
  if (S.ambient_dim() != n) throw InputError("centralizer: ambient dimension mismatch");
  if (S.dim() == 0) return Subspace::full(n);
  RatMatrix stacked(S.dim() * n, n);
  for (Index s = 0; s < S.dim(); ++s)
    stacked.middleRows(s * n, n) = ad_of(L, S.rows().row(s).transpose());
  return nullspace(stacked);
}

HypothesisReport hypotheses(const LieSuperalgebra& L) {
  HypothesisReport out;
  const Subspace derived = derived_algebra(L);
  out.derived_dim = derived.dim();
  out.center_dim = center(L).dim();
  out.centralizer_of_derived_dim = centralizer(L, derived).dim();
  out.is_perfect = out.derived_dim == L.dim();
  out.is_centerless = out.center_dim == 0;
  return out;
}

}  // namespace lsa
