#pragma once

#include "lsa/superalgebra.hpp"

namespace lsa {

/// Structural hypotheses the theorem checks depend on, decided exactly.
struct HypothesisReport {
  bool is_perfect = false;     // L = [L, L]
  bool is_centerless = false;  // Z(L) = 0
  Index derived_dim = 0;
  Index center_dim = 0;
  Index centralizer_of_derived_dim = 0;  // dim Z_L(L')
};

/// Canonical basis of L' = span{[e_i, e_j] : all i, j}.
Subspace derived_algebra(const LieSuperalgebra& L);

/// Canonical basis of Z(L) = {v : [e_i, v] = 0 for all i}, the nullspace of
/// the stacked adjoint matrices.
Subspace center(const LieSuperalgebra& L);

/// Canonical basis of Z_L(S) = {v : [s, v] = 0 for all s in S}.
Subspace centralizer(const LieSuperalgebra& L, const Subspace& S);

HypothesisReport hypotheses(const LieSuperalgebra& L);

}  // namespace lsa
