#include "lsa/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lsa {
namespace {

LieSuperalgebra make_abelian(Index m, Index n) {
  std::ostringstream name;
  name << "abelian(" << m << "|" << n << ")";
  return LieSuperalgebra(m, n, name.str());
}

LieSuperalgebra make_sl2() {
  // basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
  LieSuperalgebra L(3, 0, "sl2");
  RatVector v = RatVector::Zero(3);
  v(1) = 2;
  L.set_bracket_pair(0, 1, v);
  v.setZero();
  v(2) = -2;
  L.set_bracket_pair(0, 2, v);
  v.setZero();
  v(0) = 1;
  L.set_bracket_pair(1, 2, v);
  return L;
}

// Matrix-unit basis of gl(m|n): E_ab is even when rows a and b lie on the
// same side of the m boundary, odd otherwise. Even units first, both groups
// in lexicographic (a, b) order.
struct MatrixUnitBasis {
  Index m, n;
  std::vector<std::pair<Index, Index>> units;
  std::map<std::pair<Index, Index>, Index> index;

  explicit MatrixUnitBasis(Index m_, Index n_) : m(m_), n(n_) {
    const Index d = m + n;
    for (int phase = 0; phase < 2; ++phase) {
      const bool want_odd = phase == 1;
      for (Index a = 0; a < d; ++a)
        for (Index b = 0; b < d; ++b)
          if (((a < m) != (b < m)) == want_odd) {
            index[{a, b}] = static_cast<Index>(units.size());
            units.emplace_back(a, b);
          }
    }
  }
};

LieSuperalgebra make_gl(Index m, Index n) {
  std::ostringstream name;
  name << "gl(" << m << "|" << n << ")";
  const MatrixUnitBasis basis(m, n);
  const Index dim = static_cast<Index>(basis.units.size());
  LieSuperalgebra L(m * m + n * n, 2 * m * n, name.str());

  // [E_ab, E_cd] = delta_bc E_ad - (-1)^{|E_ab||E_cd|} delta_da E_cb
  for (Index i = 0; i < dim; ++i) {
    const auto [a, b] = basis.units[i];
    for (Index j = 0; j < dim; ++j) {
      const auto [c, d] = basis.units[j];
      RatVector v = RatVector::Zero(dim);
      if (b == c) v(basis.index.at({a, d})) += 1;
      if (d == a) v(basis.index.at({c, b})) -= parity_sign(L.parity(i), L.parity(j));
      L.set_bracket(i, j, v);
    }
  }
  return L;
}

// Supertrace-zero subalgebra of gl(m|n), m != n. Basis: the Cartan elements
// H_t = E_tt -+ E_{t+1,t+1} (sign chosen so str H_t = 0), then the even
// off-diagonal units, then the odd units. Structure constants are computed
// from honest matrix products and re-expressed in this basis exactly.
LieSuperalgebra make_sl(Index m, Index n) {
  if (m == n)
    throw InputError(
        "sl(m,m) is not in the verified catalog: its center is nontrivial "
        "(the identity has supertrace zero), so the perfect/centerless "
        "theorems do not apply; use gl or a different (m,n)");
  const Index d = m + n;
  const auto side = [&](Index a) { return a < m ? Parity::even : Parity::odd; };

  std::vector<RatMatrix> basis_mats;
  Index dim_even = 0;
  if (d > 0) {
    for (Index t = 0; t + 1 < d; ++t) {
      RatMatrix h = RatMatrix::Zero(d, d);
      h(t, t) = 1;
      h(t + 1, t + 1) = side(t) == side(t + 1) ? -1 : 1;
      basis_mats.push_back(std::move(h));
    }
  }
  for (int phase = 0; phase < 2; ++phase) {
    const bool want_odd = phase == 1;
    for (Index a = 0; a < d; ++a)
      for (Index b = 0; b < d; ++b)
        if (a != b && ((side(a) != side(b)) == want_odd)) {
          RatMatrix e = RatMatrix::Zero(d, d);
          e(a, b) = 1;
          basis_mats.push_back(std::move(e));
        }
    if (!want_odd) dim_even = static_cast<Index>(basis_mats.size());
  }
  const Index dim = static_cast<Index>(basis_mats.size());

  std::ostringstream name;
  name << "sl(" << m << "|" << n << ")";
  LieSuperalgebra L(dim_even, dim - dim_even, name.str());

  RatMatrix coords_of(d * d, dim);
  for (Index t = 0; t < dim; ++t)
    coords_of.col(t) = Eigen::Map<const RatVector>(basis_mats[t].data(), d * d);

  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      const RatMatrix prod =
          basis_mats[i] * basis_mats[j] -
          parity_sign(L.parity(i), L.parity(j)) * (basis_mats[j] * basis_mats[i]);
      const auto x =
          solve(coords_of, RatVector(Eigen::Map<const RatVector>(prod.data(), d * d)));
      if (!x) throw std::logic_error("sl(m|n) bracket left the spanned subspace");
      L.set_bracket(i, j, *x);
    }
  }
  return L;
}

struct ComponentSpec {
  std::string name;
  std::vector<Index> params;
};

size_t arity(const std::string& component) {
  if (component == "sl2") return 0;
  if (component == "abelian" || component == "gl" || component == "sl") return 2;
  throw InputError("unknown catalog algebra '" + component + "'");
}

std::vector<ComponentSpec> split_spec(const std::string& name,
                                      const std::vector<Index>& params) {
  std::vector<ComponentSpec> out;
  size_t param_pos = 0;
  size_t start = 0;
  while (start <= name.size()) {
    const size_t plus = name.find('+', start);
    const std::string component = name.substr(
        start, plus == std::string::npos ? std::string::npos : plus - start);
    if (component.empty()) throw InputError("empty component in algebra name");
    const size_t need = arity(component);
    if (param_pos + need > params.size())
      throw InputError("algebra '" + component + "' expects " +
                       std::to_string(need) + " parameter(s)");
    ComponentSpec spec{component, {}};
    for (size_t t = 0; t < need; ++t) {
      if (params[param_pos + t] < 0) throw InputError("negative parameter");
      spec.params.push_back(params[param_pos + t]);
    }
    param_pos += need;
    out.push_back(std::move(spec));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  if (param_pos != params.size())
    throw InputError("too many parameters for algebra '" + name + "'");
  return out;
}

LieSuperalgebra make_component(const ComponentSpec& spec) {
  if (spec.name == "abelian") return make_abelian(spec.params[0], spec.params[1]);
  if (spec.name == "sl2") return make_sl2();
  if (spec.name == "gl") return make_gl(spec.params[0], spec.params[1]);
  if (spec.name == "sl") return make_sl(spec.params[0], spec.params[1]);
  throw InputError("unknown catalog algebra '" + spec.name + "'");
}

}  // namespace

LieSuperalgebra make(const std::string& name, const std::vector<Index>& params) {
  const auto specs = split_spec(name, params);
  LieSuperalgebra out = make_component(specs[0]);
  for (size_t i = 1; i < specs.size(); ++i)
    out = direct_sum(out, make_component(specs[i]));
  auto report = validate(out);
  if (!report.empty()) throw ValidationError(std::move(report));
  return out;
}

std::string CatalogEntry::display() const {
  std::ostringstream os;
  os << name;
  for (Index p : params) os << " " << p;
  return os.str();
}

LieSuperalgebra CatalogEntry::make() const { return lsa::make(name, params); }

std::vector<CatalogEntry> verified_catalog() {
  return {
      {"abelian", {2, 1}}, {"sl2", {}},      {"gl", {1, 1}},
      {"gl", {2, 1}},      {"sl", {2, 1}},   {"sl2+sl2", {}},
  };
}

std::string dump(const LieSuperalgebra& L) {
  std::ostringstream os;
  os << "dims " << L.dim_even() << " " << L.dim_odd() << "\n";
  for (Index i = 0; i < L.dim(); ++i)
    for (Index j = i; j < L.dim(); ++j)
      for (Index k = 0; k < L.dim(); ++k)
        if (L.c(i, j, k) != 0)
          os << "bracket " << i << " " << j << " " << k << " " << L.c(i, j, k).str()
             << "\n";
  return os.str();
}

namespace {

Index parse_index(const std::string& token, int line) {
  if (token.empty()) throw ParseError("empty index", line);
  for (char ch : token)
    if (ch < '0' || ch > '9')
      throw ParseError("malformed index '" + token + "'", line);
  return static_cast<Index>(std::stoll(token));
}

}  // namespace

LieSuperalgebra load(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_dims = false;
  Index dim_even = 0, dim_odd = 0;
  std::optional<LieSuperalgebra> L;
  std::vector<std::vector<bool>> seen;  // (i*dim+j) x k duplicate tracking

  while (std::getline(in, line)) {
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream toks(line);
    std::vector<std::string> fields;
    for (std::string t; toks >> t;) fields.push_back(t);
    if (fields.empty()) continue;

    if (!have_dims) {
      if (fields[0] != "dims")
        throw ParseError("expected 'dims <m> <n>' before any entries", line_no);
      if (fields.size() != 3) throw ParseError("dims takes exactly two counts", line_no);
      dim_even = parse_index(fields[1], line_no);
      dim_odd = parse_index(fields[2], line_no);
      L.emplace(dim_even, dim_odd, name);
      seen.assign(L->dim() * L->dim(), std::vector<bool>(L->dim(), false));
      have_dims = true;
      continue;
    }

    if (fields[0] == "dims") throw ParseError("duplicate dims line", line_no);
    if (fields[0] != "bracket")
      throw ParseError("unknown keyword '" + fields[0] + "'", line_no);
    if (fields.size() != 5)
      throw ParseError("bracket takes 'bracket <i> <j> <k> <value>'", line_no);

    const Index i = parse_index(fields[1], line_no);
    const Index j = parse_index(fields[2], line_no);
    const Index k = parse_index(fields[3], line_no);
    const Index dim = L->dim();
    if (i >= dim || j >= dim || k >= dim)
      throw ParseError("basis index out of range for dims " +
                           std::to_string(dim_even) + "|" + std::to_string(dim_odd),
                       line_no);
    if (i > j)
      throw ParseError(
          "entries must have i <= j; the (j,i) side is derived by super "
          "skew-symmetry",
          line_no);
    if (i == j && L->parity(i) == Parity::even)
      throw ParseError(
          "nonzero [e_i, e_i] with e_i even violates super skew-symmetry",
          line_no);

    Rational value;
    try {
      value = parse_rational(fields[4]);
    } catch (const InputError& e) {
      throw ParseError(e.what(), line_no);
    }
    if (value == 0) throw ParseError("explicit zero entry (omit it instead)", line_no);
    if (seen[i * dim + j][k])
      throw ParseError("duplicate entry for (i,j,k)", line_no);
    seen[i * dim + j][k] = true;

    L->set_c(i, j, k, value);
    if (i != j)
      L->set_c(j, i, k, Rational(-parity_sign(L->parity(i), L->parity(j)) * value));
  }

  if (!have_dims) throw ParseError("missing dims line", 0);
  auto report = validate(*L);
  if (!report.empty()) throw ValidationError(std::move(report));
  return std::move(*L);
}

}  // namespace lsa
