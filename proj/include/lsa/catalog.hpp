#pragma once

#include <string>
#include <vector>

#include "lsa/superalgebra.hpp"

namespace lsa {

/// A named constructor of a validated algebra.
struct CatalogEntry {
  std::string name;
  std::vector<Index> params;

  std::string display() const;
  LieSuperalgebra make() const;
};

/// Builds a catalog algebra. Recognized names:
///   abelian m n         zero bracket, dims (m|n)
///   sl2                 basis (h, e, f): [h,e]=2e, [h,f]=-2f, [e,f]=h
///   gl m n              elementary matrices E_ab with the super-commutator
///   sl m n (m != n)     supertrace-zero subalgebra of gl(m|n)
/// Names may be composed with '+' (each component consuming its own
/// parameters) and build the direct sum, e.g. "sl2+sl2" or "sl+abelian".
/// Throws InputError on unknown names, bad parameters, or sl(m,m).
LieSuperalgebra make(const std::string& name, const std::vector<Index>& params);

/// The six algebras every theorem suite runs over.
std::vector<CatalogEntry> verified_catalog();

/// Serializes to the LSA structure-constants format:
///   dims <m> <n>
///   bracket <i> <j> <k> <num>/<den>     (nonzero constants, i <= j only)
/// Entries are sorted by (i, j, k); rationals use the integer shorthand when
/// the denominator is 1. Intended for valid algebras; the i > j half of the
/// table is derived by super skew-symmetry on load.
std::string dump(const LieSuperalgebra& L);

/// Parses and validates LSA text. Throws ParseError (with line number) on
/// format errors -- including i > j entries and even-diagonal entries, which
/// skew-symmetry forces to zero -- and ValidationError when the declared
/// constants break an algebra axiom.
LieSuperalgebra load(const std::string& text, const std::string& name = "loaded");

}  // namespace lsa
