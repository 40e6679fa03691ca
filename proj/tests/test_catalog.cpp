#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "lsa/catalog.hpp"
#include "lsa/invariants.hpp"

using namespace lsa;

namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(LSA_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_error_line(const std::string& text) {
  try {
    load(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a ParseError");
  return -1;
}

}  // namespace

TEST_CASE("catalog constructors produce the documented dimensions") {
  struct Row {
    const char* name;
    std::vector<Index> params;
    Index even, odd;
  };
  const Row rows[] = {
      {"abelian", {2, 1}, 2, 1},      {"sl2", {}, 3, 0},
      {"gl", {1, 1}, 2, 2},           {"gl", {2, 1}, 5, 4},
      {"sl", {2, 1}, 4, 4},           {"sl", {1, 2}, 4, 4},
      {"sl2+sl2", {}, 6, 0},          {"gl+abelian", {1, 1, 2, 0}, 4, 2},
  };
  for (const auto& r : rows) {
    const LieSuperalgebra L = make(r.name, r.params);
    CAPTURE(r.name);
    REQUIRE(L.dim_even() == r.even);
    REQUIRE(L.dim_odd() == r.odd);
    REQUIRE(validate(L).empty());
  }
}

TEST_CASE("the verified catalog is valid and unambiguous") {
  const auto catalog = verified_catalog();
  REQUIRE(catalog.size() == 6);
  std::set<std::string> displays;
  for (const auto& entry : catalog) {
    const LieSuperalgebra L = entry.make();
    REQUIRE(validate(L).empty());
    REQUIRE(L.dim() > 0);
    displays.insert(entry.display());
  }
  REQUIRE(displays.size() == catalog.size());
}

TEST_CASE("special linear superalgebras are perfect and centerless") {
  const std::pair<Index, Index> shapes[] = {{1, 2}, {2, 1}, {1, 3}, {3, 1}};
  for (const auto& [m, n] : shapes) {
    const LieSuperalgebra L = make("sl", {m, n});
    CAPTURE(L.name());
    const HypothesisReport h = hypotheses(L);
    REQUIRE(h.is_perfect);
    REQUIRE(h.is_centerless);
    REQUIRE(h.derived_dim == L.dim());
    REQUIRE(h.center_dim == 0);
  }
}

TEST_CASE("constructor input errors") {
  REQUIRE_THROWS_AS(make("sl", {1, 1}), InputError);   // nontrivial center
  REQUIRE_THROWS_AS(make("sl", {2, 2}), InputError);
  REQUIRE_THROWS_AS(make("su", {}), InputError);       // unknown name
  REQUIRE_THROWS_AS(make("gl", {1}), InputError);      // missing parameter
  REQUIRE_THROWS_AS(make("sl2", {1}), InputError);     // stray parameter
  REQUIRE_THROWS_AS(make("abelian", {-1, 0}), InputError);
  REQUIRE_THROWS_AS(make("+sl2", {}), InputError);     // empty component
  REQUIRE_THROWS_AS(make("sl2+", {}), InputError);
}

TEST_CASE("gl(1|1) supercommutator spot checks survive the round trip") {
  const LieSuperalgebra L = make("gl", {1, 1});
  // Basis: E11, E22 even; E12, E21 odd. The anticommutator [E12, E21]
  // equals E11 + E22.
  REQUIRE(L.bracket_basis(2, 3) == (RatVector(4) << 1, 1, 0, 0).finished());
  const LieSuperalgebra R = load(dump(L), L.name());
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j)
      REQUIRE(R.bracket_basis(i, j) == L.bracket_basis(i, j));
}

TEST_CASE("dump/load round trip is byte-identical on the whole catalog") {
  for (const auto& entry : verified_catalog()) {
    const LieSuperalgebra L = entry.make();
    CAPTURE(L.name());
    const std::string text = dump(L);
    const LieSuperalgebra back = load(text, L.name());
    REQUIRE(back.dim_even() == L.dim_even());
    REQUIRE(back.dim_odd() == L.dim_odd());
    REQUIRE(dump(back) == text);
  }
}

TEST_CASE("dump emits sorted i <= j entries with exact rationals") {
  REQUIRE(dump(make("sl2", {})) ==
          "dims 3 0\n"
          "bracket 0 1 1 2\n"
          "bracket 0 2 2 -2\n"
          "bracket 1 2 0 1\n");
  REQUIRE(dump(make("abelian", {2, 1})) == "dims 2 1\n");
}

TEST_CASE("the loader accepts comments, blank lines, and rationals") {
  const std::string text =
      "# one even and one odd generator\n"
      "\n"
      "dims 1 1\n"
      "bracket 1 1 0 1/2   # odd square\n";
  const LieSuperalgebra L = load(text);
  REQUIRE(L.dim_even() == 1);
  REQUIRE(L.dim_odd() == 1);
  REQUIRE(L.c(1, 1, 0) == Rational(1, 2));
  REQUIRE(dump(L) == "dims 1 1\nbracket 1 1 0 1/2\n");
}

TEST_CASE("the loader derives the transposed half by super skew-symmetry") {
  const LieSuperalgebra L = load("dims 2 0\nbracket 0 1 0 1\n");
  REQUIRE(L.c(0, 1, 0) == 1);
  REQUIRE(L.c(1, 0, 0) == -1);  // even-even pair: plain antisymmetry

  const LieSuperalgebra H = load("dims 1 2\nbracket 1 2 0 3\n");
  REQUIRE(H.c(1, 2, 0) == 3);
  REQUIRE(H.c(2, 1, 0) == 3);  // odd-odd pair: symmetric
}

TEST_CASE("parse errors carry 1-based line numbers") {
  REQUIRE(parse_error_line("") == 0);               // missing dims entirely
  REQUIRE(parse_error_line("# only comments\n") == 0);
  REQUIRE(parse_error_line("bracket 0 1 0 1\n") == 1);   // dims must come first
  REQUIRE(parse_error_line("dims 2\n") == 1);             // dims arity
  REQUIRE(parse_error_line("dims x 0\n") == 1);           // malformed count
  REQUIRE(parse_error_line("dims 1 0\ndims 1 0\n") == 2); // duplicate dims
  REQUIRE(parse_error_line("dims 1 0\nfoo 1 2\n") == 2);  // unknown keyword
  REQUIRE(parse_error_line("dims 2 0\nbracket 0 1 0\n") == 2);    // arity
  REQUIRE(parse_error_line("dims 2 0\nbracket 0 1 5 1\n") == 2);  // range
  REQUIRE(parse_error_line("dims 2 0\nbracket 1 0 0 1\n") == 2);  // i > j
  REQUIRE(parse_error_line("dims 2 0\nbracket 0 0 1 1\n") == 2);  // even square
  REQUIRE(parse_error_line("dims 2 0\nbracket 0 1 0 1/0\n") == 2);  // zero den
  REQUIRE(parse_error_line("dims 2 0\nbracket 0 1 0 abc\n") == 2);
  REQUIRE(parse_error_line("dims 2 0\nbracket 0 1 0 0\n") == 2);  // explicit 0
  REQUIRE(parse_error_line(
              "dims 2 0\nbracket 0 1 0 1\nbracket 0 1 0 2\n") == 3);  // dup
}

TEST_CASE("parse error messages explain the i <= j convention") {
  try {
    load("dims 2 0\nbracket 1 0 0 1\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    REQUIRE(std::string(e.what()).find("skew-symmetry") != std::string::npos);
  }
}

TEST_CASE("axiom-breaking constants are a validation error, not a parse error") {
  // [e0, e1] = e0 with e0 even and e1 odd breaks the grading, and the same
  // constants also break the Jacobi identity at (e1, e1, e0). The report
  // lists every violated instance; skew-symmetry holds by construction.
  try {
    load("dims 1 1\nbracket 0 1 0 1\n");
    FAIL("expected a ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE_FALSE(e.report().empty());
    bool saw_grading = false;
    for (const auto& v : e.report()) {
      REQUIRE(v.kind != Violation::Kind::skew_symmetry);
      if (v.kind == Violation::Kind::grading) saw_grading = true;
    }
    REQUIRE(saw_grading);
  }
}

TEST_CASE("malformed fixtures are rejected with the documented error class") {
  SECTION("even diagonal entry is a parse error") {
    REQUIRE_THROWS_AS(load(read_fixture("bad_skew.lsa")), ParseError);
  }
  SECTION("grading violation is a validation error naming the axiom") {
    try {
      load(read_fixture("bad_grading.lsa"));
      FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
      REQUIRE_FALSE(e.report().empty());
      REQUIRE(e.report().front().kind == Violation::Kind::grading);
    }
  }
  SECTION("transposed entry order is a parse error") {
    REQUIRE_THROWS_AS(load(read_fixture("bad_order.lsa")), ParseError);
  }
  SECTION("broken Jacobi identity is a validation error naming the axiom") {
    try {
      load(read_fixture("bad_jacobi.lsa"));
      FAIL("expected a ValidationError");
    } catch (const ValidationError& e) {
      bool saw_jacobi = false;
      for (const auto& v : e.report())
        if (v.kind == Violation::Kind::jacobi) saw_jacobi = true;
      REQUIRE(saw_jacobi);
    }
  }
  SECTION("the good fixture loads, validates, and round-trips") {
    const std::string text = read_fixture("good_heisenberg.lsa");
    const LieSuperalgebra L = load(text);
    REQUIRE(validate(L).empty());
    REQUIRE(L.c(1, 1, 0) == 2);
    REQUIRE(dump(load(dump(L))) == dump(L));
  }
}
