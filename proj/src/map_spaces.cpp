#include "lsa/map_spaces.hpp"

#include <functional>
#include <stdexcept>

namespace lsa {

const char* map_kind_name(MapKind kind) {
  switch (kind) {
    case MapKind::derivation: return "derivation";
    case MapKind::centroid: return "centroid";
    case MapKind::commuting: return "commuting";
  }
  return "unknown";
}

namespace {

void require_shape(const LieSuperalgebra& L, const RatMatrix& m) {
  if (m.rows() != L.dim() || m.cols() != L.dim())
    throw InputError("linear map has wrong dimensions for this algebra");
}

void append_violation(std::vector<Violation>& out, Violation::Kind kind,
                      std::vector<Index> where, const RatVector& lhs,
                      const RatVector& rhs) {
  out.push_back(Violation{kind, std::move(where), format_vector(lhs),
                          format_vector(rhs)});
}

}  // namespace

std::vector<Violation> check_map_grading(const LieSuperalgebra& L,
                                         const GradedLinearMap& f) {
  require_shape(L, f.matrix);
  std::vector<Violation> out;
  for (Index r = 0; r < L.dim(); ++r)
    for (Index c = 0; c < L.dim(); ++c)
      if (f.matrix(r, c) != 0 && L.parity(r) != L.parity(c) + f.degree)
        out.push_back(Violation{Violation::Kind::map_grading,
                                {r, c},
                                f.matrix(r, c).str(),
                                "0"});
  return out;
}

std::vector<Violation> check_derivation(const LieSuperalgebra& L,
                                        const GradedLinearMap& d) {
  require_shape(L, d.matrix);
  std::vector<Violation> out = check_map_grading(L, d);
  for (Index i = 0; i < L.dim(); ++i)
    for (Index j = 0; j < L.dim(); ++j) {
      const RatVector lhs = d.matrix * L.bracket_basis(i, j);
      const RatVector rhs =
          bracket(L, RatVector(d.matrix.col(i)), RatVector(RatVector::Unit(L.dim(), j))) +
          parity_sign(d.degree, L.parity(i)) * (L.ad(i) * d.matrix.col(j));
      if (lhs != rhs)
        append_violation(out, Violation::Kind::derivation_identity, {i, j}, lhs, rhs);
    }
  return out;
}

std::vector<Violation> check_centroid(const LieSuperalgebra& L,
                                      const GradedLinearMap& g) {
  require_shape(L, g.matrix);
  std::vector<Violation> out = check_map_grading(L, g);
  for (Index i = 0; i < L.dim(); ++i)
    for (Index j = 0; j < L.dim(); ++j) {
      const RatVector lhs = g.matrix * L.bracket_basis(i, j);
      const RatVector rhs =
          parity_sign(g.degree, L.parity(i)) * (L.ad(i) * g.matrix.col(j));
      if (lhs != rhs)
        append_violation(out, Violation::Kind::centroid_identity, {i, j}, lhs, rhs);
    }
  return out;
}

std::vector<Violation> check_commuting(const LieSuperalgebra& L,
                                       const GradedLinearMap& f) {
  require_shape(L, f.matrix);
  if (f.degree != Parity::even)
    throw InputError("super-commuting maps are even by definition");
  std::vector<Violation> out = check_map_grading(L, f);
  for (Index i = 0; i < L.dim(); ++i)
    for (Index j = 0; j < L.dim(); ++j) {
      const RatVector lhs =
          bracket(L, RatVector(f.matrix.col(i)), RatVector(RatVector::Unit(L.dim(), j)));
      const RatVector rhs = L.ad(i) * f.matrix.col(j);
      if (lhs != rhs)
        append_violation(out, Violation::Kind::commuting_identity, {i, j}, lhs, rhs);
    }
  return out;
}

namespace {

// Positions (r, c) of the degree-tau block pattern in row-major order; these
// are the unknowns of every linear-map solver.
std::vector<std::pair<Index, Index>> allowed_positions(const LieSuperalgebra& L,
                                                       Parity tau) {
  std::vector<std::pair<Index, Index>> out;
  for (Index r = 0; r < L.dim(); ++r)
    for (Index c = 0; c < L.dim(); ++c)
      if (L.parity(r) == L.parity(c) + tau) out.emplace_back(r, c);
  return out;
}

// Assembles one constraint row per (pair, output coordinate), calling emit
// with (coefficient row, i, j, a); emit fills coefficients through a setter.
using CoeffSetter = std::function<void(Index r, Index c, const Rational& v)>;

MapSpace solve_map_space(const LieSuperalgebra& L, Parity tau, MapKind kind,
                         const std::function<void(const CoeffSetter&, Index i,
                                                  Index j, Index a)>& emit) {
  const Index n = L.dim();
  const auto positions = allowed_positions(L, tau);
  const Index unknowns = static_cast<Index>(positions.size());
  std::vector<Index> position_of(static_cast<size_t>(n) * n, -1);
  for (Index t = 0; t < unknowns; ++t)
    position_of[positions[t].first * n + positions[t].second] = t;

  RatMatrix system = RatMatrix::Zero(n * n * n, unknowns);
  Index row = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index a = 0; a < n; ++a) {
        const CoeffSetter set = [&](Index r, Index c, const Rational& v) {
          if (v == 0) return;
          const Index t = position_of[r * n + c];
          if (t >= 0) system(row, t) += v;
        };
        emit(set, i, j, a);
        ++row;
      }

  const auto kernel = nullspace(system);

  MapSpace out;
  out.degree = tau;
  out.kind = kind;
  RatMatrix vectorized = RatMatrix::Zero(kernel.dim(), n * n);
  for (Index b = 0; b < kernel.dim(); ++b) {
    GradedLinearMap f{RatMatrix::Zero(n, n), tau};
    for (Index t = 0; t < unknowns; ++t)
      f.matrix(positions[t].first, positions[t].second) = kernel.rows()(b, t);
    vectorized.row(b) =
        Eigen::Map<const RatVector>(f.matrix.data(), n * n).transpose();
    out.basis.push_back(std::move(f));
  }
  out.span = Subspace(n * n, vectorized);

  // Exact re-substitution: a failure here is a solver defect, not bad input.
  for (const auto& f : out.basis) {
    std::vector<Violation> bad;
    switch (kind) {
      case MapKind::derivation: bad = check_derivation(L, f); break;
      case MapKind::centroid: bad = check_centroid(L, f); break;
      case MapKind::commuting: bad = check_commuting(L, f); break;
    }
    if (!bad.empty())
      throw std::logic_error(std::string("solved basis map fails re-check: ") +
                             describe(bad.front()));
  }
  return out;
}

}  // namespace

MapSpace derivation_space(const LieSuperalgebra& L, Parity tau) {
  return solve_map_space(
      L, tau, MapKind::derivation,
      [&](const CoeffSetter& set, Index i, Index j, Index a) {
        const int sign = parity_sign(tau, L.parity(i));
        for (Index l = 0; l < L.dim(); ++l) {
          set(a, l, L.c(i, j, l));
          set(l, i, -L.c(l, j, a));
          set(l, j, Rational(-sign) * L.c(i, l, a));
        }
      });
}

MapSpace centroid_space(const LieSuperalgebra& L, Parity tau) {
  return solve_map_space(
      L, tau, MapKind::centroid,
      [&](const CoeffSetter& set, Index i, Index j, Index a) {
        const int sign = parity_sign(tau, L.parity(i));
        for (Index l = 0; l < L.dim(); ++l) {
          set(a, l, L.c(i, j, l));
          set(l, j, Rational(-sign) * L.c(i, l, a));
        }
      });
}

MapSpace commuting_map_space(const LieSuperalgebra& L) {
  return solve_map_space(
      L, Parity::even, MapKind::commuting,
      [&](const CoeffSetter& set, Index i, Index j, Index a) {
        for (Index l = 0; l < L.dim(); ++l) {
          set(l, i, L.c(l, j, a));
          set(l, j, -L.c(i, l, a));
        }
      });
}

GradedLinearMap identity_map(const LieSuperalgebra& L) {
  return GradedLinearMap{RatMatrix::Identity(L.dim(), L.dim()), Parity::even};
}

TheoremCertificate verify_commuting_in_centroid(const LieSuperalgebra& L) {
  const HypothesisReport h = hypotheses(L);
  if (!h.is_perfect)
    throw PreconditionError("is_perfect fails: the algebra is not equal to "
                            "its derived algebra");
  if (h.centralizer_of_derived_dim != 0)
    throw PreconditionError(
        "centralizer_of_derived_dim is nonzero: the derived algebra has a "
        "nontrivial centralizer");

  TheoremCertificate cert;
  cert.statement =
      "every linear super-commuting map lies in the even centroid";
  cert.passed = true;

  const MapSpace commuting = commuting_map_space(L);
  const Index n = L.dim();

  // Double-bracket identity support: M(w,z) = ad([e_w, e_z]).
  std::vector<RatMatrix> ad_bracket;
  ad_bracket.reserve(static_cast<size_t>(n) * n);
  for (Index w = 0; w < n; ++w)
    for (Index z = 0; z < n; ++z)
      ad_bracket.push_back(ad_of(L, L.bracket_basis(w, z)));

  for (Index b = 0; b < commuting.dim(); ++b) {
    const GradedLinearMap& f = commuting.basis[b];
    for (const Violation& v : check_centroid(L, f)) {
      cert.passed = false;
      Violation tagged = v;
      tagged.where.insert(tagged.where.begin(), b);
      cert.violations.push_back(std::move(tagged));
    }
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const RatVector g =
            f.matrix * L.bracket_basis(x, y) - L.ad(x) * f.matrix.col(y);
        if (is_zero(g)) continue;
        for (Index u = 0; u < n; ++u) {
          const RatVector hu = L.ad(u) * g;
          if (is_zero(hu)) continue;
          for (Index w = 0; w < n; ++w)
            for (Index z = 0; z < n; ++z) {
              const RatVector lhs = ad_bracket[w * n + z] * hu;
              if (!is_zero(lhs)) {
                cert.passed = false;
                append_violation(cert.violations, Violation::Kind::double_bracket,
                                 {b, w, z, u, x, y}, lhs,
                                 RatVector::Zero(n));
              }
            }
        }
      }
  }
  return cert;
}

}  // namespace lsa
