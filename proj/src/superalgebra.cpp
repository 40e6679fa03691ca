#include "lsa/superalgebra.hpp"

#include <sstream>

namespace lsa {

const char* violation_kind_name(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::skew_symmetry: return "super skew-symmetry";
    case Violation::Kind::grading: return "grading compatibility";
    case Violation::Kind::jacobi: return "super-Jacobi identity";
    case Violation::Kind::bilinear_skew: return "bilinear super skew-symmetry";
    case Violation::Kind::bilinear_grading: return "bilinear grading";
    case Violation::Kind::biderivation_identity: return "super-biderivation identity";
    case Violation::Kind::cross_bracket: return "cross-bracket identity";
    case Violation::Kind::perfect_identity: return "perfect-case identity";
    case Violation::Kind::second_slot_leibniz: return "second-slot Leibniz identity";
    case Violation::Kind::range_containment: return "range containment";
    case Violation::Kind::derived_pair_vanishing: return "vanishing on derived pairs";
    case Violation::Kind::map_grading: return "linear-map grading";
    case Violation::Kind::derivation_identity: return "superderivation identity";
    case Violation::Kind::centroid_identity: return "centroid identity";
    case Violation::Kind::commuting_identity: return "super-commuting identity";
    case Violation::Kind::double_bracket: return "double-bracket identity";
  }
  return "unknown";
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << violation_kind_name(v.kind) << " at (";
  for (size_t i = 0; i < v.where.size(); ++i) {
    if (i) os << ",";
    os << v.where[i];
  }
  os << "): lhs = " << v.lhs << ", rhs = " << v.rhs;
  return os.str();
}

ValidationError::ValidationError(std::vector<Violation> report)
    : InputError([&report] {
        std::string msg = "algebra fails validation:";
        for (const auto& v : report) msg += "\n  " + describe(v);
        return msg;
      }()),
      report_(std::move(report)) {}

Rational parse_rational(std::string_view text) {
  const auto parse_int = [](std::string_view s, const char* what) -> Integer {
    if (s.empty()) throw InputError(std::string("empty ") + what);
    size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InputError(std::string("malformed ") + what);
    for (size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw InputError("malformed rational: '" + std::string(s) + "'");
    // GMP accepts a leading '-' but not a leading '+'.
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, "numerator"));
  const Integer num = parse_int(text.substr(0, slash), "numerator");
  const Integer den = parse_int(text.substr(slash + 1), "denominator");
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_vector(const RatVector& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v(i).str();
  }
  return out + ")";
}

LieSuperalgebra::LieSuperalgebra(Index dim_even, Index dim_odd, std::string name)
    : dim_even_(dim_even), dim_odd_(dim_odd), name_(std::move(name)) {
  if (dim_even < 0 || dim_odd < 0) throw InputError("negative dimension");
  ad_.assign(dim(), RatMatrix::Zero(dim(), dim()));
}

void LieSuperalgebra::set_bracket(Index i, Index j, const RatVector& coords) {
  if (coords.size() != dim()) throw InputError("set_bracket: wrong length");
  ad_[i].col(j) = coords;
}

void LieSuperalgebra::set_c(Index i, Index j, Index k, const Rational& value) {
  ad_[i](k, j) = value;
}

void LieSuperalgebra::set_bracket_pair(Index i, Index j, const RatVector& coords) {
  set_bracket(i, j, coords);
  if (i != j)
    set_bracket(j, i, RatVector(-parity_sign(parity(i), parity(j)) * coords));
}

std::vector<Violation> validate(const LieSuperalgebra& L) {
  std::vector<Violation> out;
  const Index n = L.dim();

  // super skew-symmetry, each unordered pair once
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const int sign = parity_sign(L.parity(i), L.parity(j));
      for (Index k = 0; k < n; ++k) {
        const Rational expected = -sign * L.c(j, i, k);
        if (L.c(i, j, k) != expected)
          out.push_back({Violation::Kind::skew_symmetry,
                         {i, j, k},
                         L.c(i, j, k).str(),
                         expected.str()});
      }
    }
  }

  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (L.c(i, j, k) != 0 && L.parity(k) != L.parity(i) + L.parity(j))
          out.push_back({Violation::Kind::grading,
                         {i, j, k},
                         L.c(i, j, k).str(),
                         "0 (parity of e_k differs from |e_i|+|e_j|)"});

  // [[e_i,e_j],e_k] = [e_i,[e_j,e_k]] - (-1)^{|e_i||e_j|} [e_j,[e_i,e_k]]
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        const RatVector lhs = bracket(L, L.bracket_basis(i, j),
                                      RatVector(RatVector::Unit(n, k)));
        const RatVector rhs =
            L.ad(i) * L.bracket_basis(j, k) -
            parity_sign(L.parity(i), L.parity(j)) * (L.ad(j) * L.bracket_basis(i, k));
        if (lhs != rhs)
          out.push_back({Violation::Kind::jacobi,
                         {i, j, k},
                         format_vector(lhs),
                         format_vector(rhs)});
      }
    }
  }
  return out;
}

RatVector bracket(const LieSuperalgebra& L, const RatVector& x, const RatVector& y) {
  if (x.size() != L.dim() || y.size() != L.dim())
    throw InputError("bracket: dimension mismatch");
  RatVector out = RatVector::Zero(L.dim());
  for (Index i = 0; i < L.dim(); ++i)
    if (x(i) != 0) out += x(i) * (L.ad(i) * y);
  return out;
}

AlgebraVector bracket(const LieSuperalgebra& L, const AlgebraVector& x,
                      const AlgebraVector& y) {
  AlgebraVector out{bracket(L, x.coords, y.coords), std::nullopt};
  if (x.parity && y.parity) out.parity = *x.parity + *y.parity;
  return out;
}

RatMatrix ad_of(const LieSuperalgebra& L, const RatVector& x) {
  if (x.size() != L.dim()) throw InputError("ad_of: dimension mismatch");
  RatMatrix out = RatMatrix::Zero(L.dim(), L.dim());
  for (Index i = 0; i < L.dim(); ++i)
    if (x(i) != 0) out += x(i) * L.ad(i);
  return out;
}

bool is_homogeneous(const LieSuperalgebra& L, const RatVector& v, Parity p) {
  if (v.size() != L.dim()) throw InputError("is_homogeneous: dimension mismatch");
  for (Index i = 0; i < L.dim(); ++i)
    if (v(i) != 0 && L.parity(i) != p) return false;
  return true;
}

LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b) {
  for (const auto* part : {&a, &b}) {
    auto report = validate(*part);
    if (!report.empty()) throw ValidationError(std::move(report));
  }
  LieSuperalgebra out(a.dim_even() + b.dim_even(), a.dim_odd() + b.dim_odd(),
                      a.name() + "+" + b.name());
  const auto map_a = [&](Index i) {
    return i < a.dim_even() ? i : a.dim_even() + b.dim_even() + (i - a.dim_even());
  };
  const auto map_b = [&](Index i) {
    return i < b.dim_even() ? a.dim_even() + i
                            : out.dim_even() + a.dim_odd() + (i - b.dim_even());
  };
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      for (Index k = 0; k < a.dim(); ++k)
        if (a.c(i, j, k) != 0) out.set_c(map_a(i), map_a(j), map_a(k), a.c(i, j, k));
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j)
      for (Index k = 0; k < b.dim(); ++k)
        if (b.c(i, j, k) != 0) out.set_c(map_b(i), map_b(j), map_b(k), b.c(i, j, k));
  return out;
}

}  // namespace lsa
