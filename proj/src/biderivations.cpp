#include "lsa/biderivations.hpp"

#include <array>
#include <stdexcept>

namespace lsa {
namespace {

void require_shape(const LieSuperalgebra& L, const GradedBilinearMap& delta) {
  if (static_cast<Index>(delta.slices.size()) != L.dim())
    throw InputError("bilinear map has wrong number of slices for this algebra");
  for (const RatMatrix& s : delta.slices)
    if (s.rows() != L.dim() || s.cols() != L.dim())
      throw InputError("bilinear map slice has wrong dimensions");
}

// Independent unknowns of a degree-tau super skew-symmetric bilinear map:
// one unknown per (i, j, k) with i < j (or i = j with e_i odd) and
// parity(k) = parity(i) + parity(j) + tau. Every other entry is either zero
// or a signed alias of an independent one.
class UnknownTable {
 public:
  UnknownTable(const LieSuperalgebra& L, Parity tau) : n_(L.dim()) {
    index_.assign(static_cast<size_t>(n_) * n_ * n_, -1);
    for (Index i = 0; i < n_; ++i)
      for (Index j = i; j < n_; ++j) {
        if (i == j && L.parity(i) == Parity::even) continue;
        for (Index k = 0; k < n_; ++k) {
          if (L.parity(k) != L.parity(i) + L.parity(j) + tau) continue;
          index_[flat(i, j, k)] = static_cast<Index>(triples_.size());
          triples_.push_back({i, j, k});
        }
      }
  }

  Index count() const { return static_cast<Index>(triples_.size()); }
  const std::array<Index, 3>& triple(Index t) const { return triples_[t]; }

  // Signed substitution of an arbitrary entry: entry (i,j,k) equals
  // sign * unknown(t), or zero when t is -1.
  struct Ref {
    Index t = -1;
    int sign = 1;
  };

  Ref ref(const LieSuperalgebra& L, Index i, Index j, Index k) const {
    if (i <= j) return Ref{index_[flat(i, j, k)], 1};
    return Ref{index_[flat(j, i, k)], -parity_sign(L.parity(i), L.parity(j))};
  }

 private:
  size_t flat(Index i, Index j, Index k) const {
    return (static_cast<size_t>(i) * n_ + j) * n_ + k;
  }

  Index n_;
  std::vector<Index> index_;
  std::vector<std::array<Index, 3>> triples_;
};

GradedBilinearMap map_from_solution(const LieSuperalgebra& L, Parity tau,
                                    const UnknownTable& table,
                                    const RatVector& x) {
  const Index n = L.dim();
  GradedBilinearMap delta;
  delta.degree = tau;
  delta.slices.assign(n, RatMatrix::Zero(n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        if (L.parity(k) != L.parity(i) + L.parity(j) + tau) continue;
        const auto r = table.ref(L, i, j, k);
        if (r.t >= 0 && x(r.t) != 0) delta.slices[i](k, j) = r.sign * x(r.t);
      }
  return delta;
}

// Identity rows of the defining first-slot equation over the reduced
// unknowns, one per tuple (i, j, k, output coordinate a); identically zero
// rows are dropped.
std::vector<RatVector> identity_rows(const LieSuperalgebra& L, Parity tau,
                                     const UnknownTable& table) {
  const Index n = L.dim();
  std::vector<RatVector> rows;
  RatVector row(table.count());
  const auto add = [&](Index i, Index j, Index k, const Rational& v) {
    if (v == 0) return;
    const auto r = table.ref(L, i, j, k);
    if (r.t >= 0) row(r.t) += r.sign * v;
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const int s1 = parity_sign(tau, L.parity(i));
        const int s2 = parity_sign(L.parity(j), L.parity(k));
        for (Index a = 0; a < n; ++a) {
          row.setZero();
          for (Index l = 0; l < n; ++l) {
            add(l, k, a, L.c(i, j, l));
            add(j, k, l, Rational(-s1) * L.c(i, l, a));
            add(i, k, l, Rational(-s2) * L.c(l, j, a));
          }
          if (!is_zero(row)) rows.push_back(row);
        }
      }
  return rows;
}

BiderivationSpace solve_bilinear_space(const LieSuperalgebra& L, Parity tau,
                                       BilinearKind kind,
                                       std::vector<RatVector> rows,
                                       const UnknownTable& table) {
  const Index n = L.dim();
  RatMatrix system = RatMatrix::Zero(static_cast<Index>(rows.size()),
                                     table.count());
  for (size_t r = 0; r < rows.size(); ++r) system.row(static_cast<Index>(r)) = rows[r];
  const auto kernel = nullspace(system);

  BiderivationSpace out;
  out.degree = tau;
  out.kind = kind;
  RatMatrix vectorized = RatMatrix::Zero(kernel.dim(), n * n * n);
  for (Index b = 0; b < kernel.dim(); ++b) {
    GradedBilinearMap delta =
        map_from_solution(L, tau, table, kernel.rows().row(b).transpose());
    vectorized.row(b) = vectorize(L, delta).transpose();
    out.basis.push_back(std::move(delta));
  }
  out.span = Subspace(n * n * n, vectorized);
  return out;
}

void append_violation(std::vector<Violation>& out, Violation::Kind kind,
                      std::vector<Index> where, const RatVector& lhs,
                      const RatVector& rhs) {
  out.push_back(Violation{kind, std::move(where), format_vector(lhs),
                          format_vector(rhs)});
}

void require_biderivation(const LieSuperalgebra& L,
                          const GradedBilinearMap& delta, const char* who) {
  const auto bad = is_biderivation(L, delta);
  if (!bad.empty())
    throw PreconditionError(std::string(who) +
                            ": input is not a super-biderivation; first "
                            "violation: " +
                            describe(bad.front()));
}

}  // namespace

RatVector apply(const LieSuperalgebra& L, const GradedBilinearMap& delta,
                const RatVector& x, const RatVector& y) {
  require_shape(L, delta);
  if (x.size() != L.dim() || y.size() != L.dim())
    throw InputError("apply: vector has wrong dimension");
  RatVector out = RatVector::Zero(L.dim());
  for (Index i = 0; i < L.dim(); ++i)
    if (x(i) != 0) out += x(i) * (delta.slices[i] * y);
  return out;
}

RatVector vectorize(const LieSuperalgebra& L, const GradedBilinearMap& delta) {
  const Index n = L.dim();
  RatVector v = RatVector::Zero(n * n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        v((i * n + j) * n + k) = delta.slices[i](k, j);
  return v;
}

std::vector<Violation> is_biderivation(const LieSuperalgebra& L,
                                       const GradedBilinearMap& delta) {
  require_shape(L, delta);
  const Index n = L.dim();
  std::vector<Violation> out;

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (delta.slices[i](k, j) != 0 &&
            L.parity(k) != L.parity(i) + L.parity(j) + delta.degree)
          out.push_back(Violation{Violation::Kind::bilinear_grading,
                                  {i, j, k},
                                  delta.slices[i](k, j).str(),
                                  "0"});

  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      const RatVector lhs = delta.value(i, j);
      const RatVector rhs =
          Rational(-parity_sign(L.parity(i), L.parity(j))) * delta.value(j, i);
      if (lhs != rhs)
        append_violation(out, Violation::Kind::bilinear_skew, {i, j}, lhs, rhs);
    }

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      // delta([e_i, e_j], -) expanded through the structure constants.
      RatMatrix first_slot = RatMatrix::Zero(n, n);
      const RatVector b = L.bracket_basis(i, j);
      for (Index l = 0; l < n; ++l)
        if (b(l) != 0) first_slot += b(l) * delta.slices[l];
      const int s1 = parity_sign(delta.degree, L.parity(i));
      for (Index k = 0; k < n; ++k) {
        const RatVector lhs = first_slot.col(k);
        const RatVector rhs =
            Rational(s1) * (L.ad(i) * delta.value(j, k)) +
            Rational(parity_sign(L.parity(j), L.parity(k))) *
                bracket(L, delta.value(i, k), RatVector(RatVector::Unit(n, j)));
        if (lhs != rhs)
          append_violation(out, Violation::Kind::biderivation_identity,
                           {i, j, k}, lhs, rhs);
      }
    }
  return out;
}

BiderivationSpace biderivation_space(const LieSuperalgebra& L, Parity tau) {
  const UnknownTable table(L, tau);
  BiderivationSpace out = solve_bilinear_space(
      L, tau, BilinearKind::full, identity_rows(L, tau, table), table);
  for (const auto& delta : out.basis) {
    const auto bad = is_biderivation(L, delta);
    if (!bad.empty())
      throw std::logic_error(
          std::string("solved biderivation fails re-check: ") +
          describe(bad.front()));
  }
  return out;
}

GradedBilinearMap from_commuting_map(const LieSuperalgebra& L,
                                     const GradedLinearMap& f) {
  if (f.degree != Parity::even)
    throw PreconditionError("from_commuting_map: the map must be even");
  const auto bad = check_commuting(L, f);
  if (!bad.empty())
    throw PreconditionError(
        "from_commuting_map: the map is not super-commuting; first "
        "violation: " +
        describe(bad.front()));
  GradedBilinearMap delta;
  delta.degree = Parity::even;
  delta.slices.reserve(L.dim());
  for (Index i = 0; i < L.dim(); ++i)
    delta.slices.push_back(L.ad(i) * f.matrix);  // [e_i, f(e_j)]
  return delta;
}

GradedBilinearMap from_centroid(const LieSuperalgebra& L,
                                const GradedLinearMap& g) {
  const auto bad = check_centroid(L, g);
  if (!bad.empty())
    throw PreconditionError(
        "from_centroid: the map is not in the centroid; first violation: " +
        describe(bad.front()));
  GradedBilinearMap delta;
  delta.degree = g.degree;
  delta.slices.reserve(L.dim());
  for (Index i = 0; i < L.dim(); ++i)
    delta.slices.push_back(g.matrix * L.ad(i));  // g([e_i, e_j])
  return delta;
}

std::vector<Violation> check_cross_identity(const LieSuperalgebra& L,
                                            const GradedBilinearMap& delta) {
  require_shape(L, delta);
  const Index n = L.dim();
  std::vector<Violation> out;
  // ad(delta(e_x, e_y)) and ad([e_x, e_y]) for all pairs, reused across the
  // 4-tuple loop.
  std::vector<RatMatrix> ad_delta, ad_bracket;
  ad_delta.reserve(static_cast<size_t>(n) * n);
  ad_bracket.reserve(static_cast<size_t>(n) * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      ad_delta.push_back(ad_of(L, delta.value(x, y)));
      ad_bracket.push_back(ad_of(L, L.bracket_basis(x, y)));
    }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const int sign =
          parity_sign(delta.degree, L.parity(x) + L.parity(y));
      for (Index u = 0; u < n; ++u)
        for (Index v = 0; v < n; ++v) {
          const RatVector lhs = ad_delta[x * n + y] * L.bracket_basis(u, v);
          const RatVector rhs =
              Rational(sign) * (ad_bracket[x * n + y] * delta.value(u, v));
          if (lhs != rhs)
            append_violation(out, Violation::Kind::cross_bracket, {x, y, u, v},
                             lhs, rhs);
        }
    }
  return out;
}

MembershipReport residual_membership(const LieSuperalgebra& L,
                                     const GradedBilinearMap& delta) {
  require_biderivation(L, delta, "residual_membership");
  const Subspace W = centralizer(L, derived_algebra(L));
  const Index n = L.dim();
  MembershipReport report;
  for (Index u = 0; u < n; ++u)
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const RatVector first = delta.slices[u] * L.bracket_basis(x, y);
        const RatVector second =
            Rational(parity_sign(delta.degree, L.parity(u))) *
            (L.ad(u) * delta.value(x, y));
        const RatVector stated = first - second;
        if (W.contains(stated)) continue;
        report.all_contained = false;
        // Variant with the alternative sign on the first term, reported
        // side by side, never merged.
        const int alt = parity_sign(delta.degree, L.parity(x)) *
                        parity_sign(L.parity(x), L.parity(u));
        const RatVector variant = Rational(alt) * first - second;
        report.failures.push_back(ResidualFailure{
            {u, x, y}, format_vector(stated), false, format_vector(variant),
            W.contains(variant)});
      }
  return report;
}

std::vector<Violation> check_perfect_identity(const LieSuperalgebra& L,
                                              const GradedBilinearMap& delta) {
  if (!hypotheses(L).is_perfect)
    throw PreconditionError(
        "is_perfect fails: the algebra is not equal to its derived algebra");
  require_biderivation(L, delta, "check_perfect_identity");
  const Index n = L.dim();
  std::vector<Violation> out;
  for (Index u = 0; u < n; ++u)
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const RatVector lhs = delta.slices[u] * L.bracket_basis(x, y);
        const RatVector rhs =
            Rational(parity_sign(delta.degree, L.parity(u))) *
            (L.ad(u) * delta.value(x, y));
        if (lhs != rhs)
          append_violation(out, Violation::Kind::perfect_identity, {u, x, y},
                           lhs, rhs);
      }
  return out;
}

GradedLinearMap decompose_via_centroid(const LieSuperalgebra& L,
                                       const GradedBilinearMap& delta) {
  const auto h = hypotheses(L);
  if (!h.is_perfect)
    throw PreconditionError(
        "is_perfect fails: the algebra is not equal to its derived algebra");
  if (!h.is_centerless)
    throw PreconditionError("is_centerless fails: the center is nonzero");
  require_biderivation(L, delta, "decompose_via_centroid");

  const Index n = L.dim();
  const Parity tau = delta.degree;
  // Unknowns: the degree-tau block entries of g; equations:
  // g([e_i, e_j]) = delta(e_i, e_j) for every pair.
  std::vector<std::pair<Index, Index>> positions;
  std::vector<Index> position_of(static_cast<size_t>(n) * n, -1);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      if (L.parity(r) == L.parity(c) + tau) {
        position_of[r * n + c] = static_cast<Index>(positions.size());
        positions.emplace_back(r, c);
      }
  const Index unknowns = static_cast<Index>(positions.size());

  RatMatrix a = RatMatrix::Zero(n * n * n, unknowns);
  RatVector b = RatVector::Zero(n * n * n);
  Index row = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const RatVector br = L.bracket_basis(i, j);
      for (Index out_c = 0; out_c < n; ++out_c) {
        for (Index l = 0; l < n; ++l) {
          if (br(l) == 0) continue;
          const Index t = position_of[out_c * n + l];
          if (t >= 0) a(row, t) += br(l);
        }
        b(row) = delta.slices[i](out_c, j);
        ++row;
      }
    }

  const auto x = solve(a, b);
  if (!x)
    throw TheoremViolation(
        "no linear map satisfies g([x,y]) = delta(x,y) on " + L.name() +
        ": the factorization-through-the-bracket statement fails here");
  GradedLinearMap g{RatMatrix::Zero(n, n), tau};
  for (Index t = 0; t < unknowns; ++t)
    g.matrix(positions[t].first, positions[t].second) = (*x)(t);

  const auto bad = check_centroid(L, g);
  if (!bad.empty())
    throw TheoremViolation(
        "the factor map solved on " + L.name() +
        " is not in the centroid; first violation: " + describe(bad.front()));
  const GradedBilinearMap rebuilt = from_centroid(L, g);
  for (Index i = 0; i < n; ++i)
    if (rebuilt.slices[i] != delta.slices[i])
      throw TheoremViolation(
          "reconstruction from the centroid factor differs from the input "
          "on " +
          L.name());
  return g;
}

BiderivationSpace special_biderivation_space(const LieSuperalgebra& L,
                                             Parity tau) {
  const Index n = L.dim();
  const UnknownTable table(L, tau);
  std::vector<RatVector> rows = identity_rows(L, tau, table);

  const Subspace derived = derived_algebra(L);
  const Subspace W = centralizer(L, derived);

  // Range containment: value(e_i, e_j) reduced against W must vanish.
  // reduction(v) is linear, so it is a matrix in the standard basis.
  RatMatrix reducer(n, n);
  for (Index j = 0; j < n; ++j)
    reducer.col(j) = W.reduce(RatVector::Unit(n, j));
  RatVector row(table.count());
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      if (i == j && L.parity(i) == Parity::even) continue;
      for (Index a = 0; a < n; ++a) {
        row.setZero();
        bool nonzero = false;
        for (Index k = 0; k < n; ++k) {
          if (reducer(a, k) == 0) continue;
          const auto r = table.ref(L, i, j, k);
          if (r.t < 0) continue;
          row(r.t) += r.sign * reducer(a, k);
          nonzero = true;
        }
        if (nonzero) rows.push_back(row);
      }
    }

  // Vanishing on derived x derived basis pairs.
  for (Index s = 0; s < derived.dim(); ++s)
    for (Index t = 0; t < derived.dim(); ++t) {
      const RatVector u = derived.rows().row(s).transpose();
      const RatVector v = derived.rows().row(t).transpose();
      for (Index a = 0; a < n; ++a) {
        row.setZero();
        bool nonzero = false;
        for (Index i = 0; i < n; ++i) {
          if (u(i) == 0) continue;
          for (Index j = 0; j < n; ++j) {
            if (v(j) == 0) continue;
            const auto r = table.ref(L, i, j, a);
            if (r.t < 0) continue;
            row(r.t) += r.sign * u(i) * v(j);
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(row);
      }
    }

  BiderivationSpace out =
      solve_bilinear_space(L, tau, BilinearKind::special, std::move(rows), table);
  for (const auto& delta : out.basis) {
    const auto bad = is_biderivation(L, delta);
    if (!bad.empty())
      throw std::logic_error(
          std::string("solved special biderivation fails re-check: ") +
          describe(bad.front()));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (!W.contains(delta.value(i, j)))
          throw std::logic_error(
              "solved special biderivation leaves the centralizer range");
    for (Index s = 0; s < derived.dim(); ++s)
      for (Index t = 0; t < derived.dim(); ++t)
        if (!is_zero(apply(L, delta, derived.rows().row(s).transpose(),
                           derived.rows().row(t).transpose())))
          throw std::logic_error(
              "solved special biderivation fails derived-pair vanishing");
  }
  return out;
}

bool check_triviality(const LieSuperalgebra& L,
                      const GradedBilinearMap& delta) {
  require_shape(L, delta);
  const Subspace derived = derived_algebra(L);
  for (Index i = 0; i < L.dim(); ++i)
    for (Index t = 0; t < derived.dim(); ++t)
      if (!is_zero(delta.slices[i] * derived.rows().row(t).transpose()))
        return false;
  return true;
}

InducedQuotientMap induced_on_quotient(const LieSuperalgebra& L,
                                       const GradedBilinearMap& delta) {
  require_biderivation(L, delta, "induced_on_quotient");
  CenterQuotient q = quotient_by_center(L);
  const Index n = L.dim();

  for (Index z = 0; z < q.center.dim(); ++z) {
    const RatVector zc = q.center.rows().row(z).transpose();
    for (Index j = 0; j < n; ++j) {
      const RatVector img =
          apply(L, delta, zc, RatVector(RatVector::Unit(n, j)));
      if (!q.center.contains(img))
        throw TheoremViolation(
            "the bilinear map does not send (center, e_" + std::to_string(j) +
            ") into the center of " + L.name() +
            "; the induced quotient map is not well defined");
    }
  }

  const Index m = q.algebra.dim();
  GradedBilinearMap induced;
  induced.degree = delta.degree;
  induced.slices.assign(m, RatMatrix::Zero(m, m));
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b)
      induced.slices[a].col(b) =
          q.projection *
          delta.value(q.complement_cols[a], q.complement_cols[b]);

  const auto bad = is_biderivation(q.algebra, induced);
  if (!bad.empty())
    throw TheoremViolation(
        "the induced map on the center quotient of " + L.name() +
        " is not a super-biderivation; first violation: " +
        describe(bad.front()));
  return InducedQuotientMap{std::move(q), std::move(induced)};
}

std::vector<Violation> check_second_slot_leibniz(
    const LieSuperalgebra& L, const GradedBilinearMap& delta) {
  require_shape(L, delta);
  const Index n = L.dim();
  std::vector<Violation> out;
  for (Index u = 0; u < n; ++u)
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        const RatVector lhs = delta.slices[u] * L.bracket_basis(x, y);
        const RatVector rhs =
            bracket(L, delta.value(u, x), RatVector(RatVector::Unit(n, y))) +
            Rational(parity_sign(delta.degree + L.parity(u), L.parity(x))) *
                (L.ad(x) * delta.value(u, y));
        if (lhs != rhs)
          append_violation(out, Violation::Kind::second_slot_leibniz,
                           {u, x, y}, lhs, rhs);
      }
  return out;
}

}  // namespace lsa
