#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code;
  std::string output;
};

// Runs the installed binary through the shell and captures stdout (and
// stderr unless told otherwise).
CliResult run_cli(const std::string& args, bool merge_stderr = true) {
  const std::string command = std::string(LSA_CLI_PATH) + " " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0)
    output.append(buffer, got);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), output};
}

std::string fixture(const std::string& name) {
  return std::string(LSA_FIXTURE_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("info prints dimensions and structural flags") {
  const CliResult r = run_cli("info sl2");
  REQUIRE(r.exit_code == 0);
  REQUIRE(contains(r.output, "name: sl2"));
  REQUIRE(contains(r.output, "dim_even: 3"));
  REQUIRE(contains(r.output, "is_perfect: yes"));
  REQUIRE(contains(r.output, "is_centerless: yes"));

  const CliResult g = run_cli("info --algebra gl 1 1");
  REQUIRE(g.exit_code == 0);
  REQUIRE(contains(g.output, "dim_even: 2"));
  REQUIRE(contains(g.output, "dim_odd: 2"));
  REQUIRE(contains(g.output, "is_perfect: no"));
  REQUIRE(contains(g.output, "center_dim: 1"));
}

TEST_CASE("verify reports axiom violations and exits 1") {
  const CliResult bad = run_cli("verify --file " + fixture("bad_jacobi.lsa"));
  REQUIRE(bad.exit_code == 1);
  REQUIRE(contains(bad.output, "valid: no"));
  REQUIRE(contains(bad.output, "jacobi"));

  const CliResult good =
      run_cli("verify --file " + fixture("good_heisenberg.lsa"));
  REQUIRE(good.exit_code == 0);
  REQUIRE(contains(good.output, "valid: yes"));
}

TEST_CASE("verify surfaces parse errors with their line numbers") {
  const CliResult r = run_cli("verify --file " + fixture("bad_order.lsa"));
  REQUIRE(r.exit_code == 1);
  REQUIRE(contains(r.output, "line 2"));
}

TEST_CASE("compute emits exact dimensions as JSON") {
  const CliResult r = run_cli("compute der sl2 --json");
  REQUIRE(r.exit_code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  REQUIRE(doc.at("schema") == 1);
  REQUIRE(doc.at("dimensions.der_even") == 3);
  REQUIRE(doc.at("dimensions.der_odd") == 0);

  const CliResult b = run_cli("compute bider --algebra gl 1 1 --json");
  REQUIRE(b.exit_code == 0);
  const auto bdoc = nlohmann::json::parse(b.output);
  REQUIRE(bdoc.at("dimensions.bider_even") == 1);
  REQUIRE(bdoc.at("dimensions.bider_odd") == 0);
  REQUIRE(bdoc.at("basis.bider_even").size() == 1);
}

TEST_CASE("compute respects the degree flag") {
  const CliResult even = run_cli("compute centroid sl2 --degree even --json");
  REQUIRE(even.exit_code == 0);
  const auto doc = nlohmann::json::parse(even.output);
  REQUIRE(doc.at("dimensions.centroid_even") == 1);
  REQUIRE_FALSE(doc.contains("dimensions.centroid_odd"));

  const CliResult bad = run_cli("compute der sl2 --degree sideways");
  REQUIRE(bad.exit_code == 1);
  REQUIRE(contains(bad.output, "--degree"));
}

TEST_CASE("theorem certificates report pass / not-applicable correctly") {
  const CliResult pass = run_cli("theorem bider-centroid sl2");
  REQUIRE(pass.exit_code == 0);
  REQUIRE(contains(pass.output, "status: pass"));
  REQUIRE(contains(pass.output, "bider_even: 1"));
  REQUIRE(contains(pass.output, "centroid_even: 1"));

  const CliResult na = run_cli("theorem bider-centroid --algebra gl 1 1");
  REQUIRE(na.exit_code == 0);
  REQUIRE(contains(na.output, "not-applicable"));
  REQUIRE(contains(na.output, "is_perfect"));

  const CliResult commuting = run_cli("theorem commuting-centroid sl2");
  REQUIRE(commuting.exit_code == 0);
  REQUIRE(contains(commuting.output, "status: pass"));

  const CliResult lemmas = run_cli("theorem lemma-suite --algebra gl 1 1");
  REQUIRE(lemmas.exit_code == 0);
  REQUIRE(contains(lemmas.output, "status: pass"));
  REQUIRE(contains(lemmas.output, "second_slot_leibniz_violations_even: 0"));
}

TEST_CASE("dump and load print the canonical structure text") {
  const CliResult d = run_cli("dump sl2", false);
  REQUIRE(d.exit_code == 0);
  REQUIRE(d.output ==
          "dims 3 0\n"
          "bracket 0 1 1 2\n"
          "bracket 0 2 2 -2\n"
          "bracket 1 2 0 1\n");

  const CliResult l =
      run_cli("load --file " + fixture("good_heisenberg.lsa"), false);
  REQUIRE(l.exit_code == 0);
  REQUIRE(l.output == "dims 1 1\nbracket 1 1 0 2\n");

  const CliResult missing = run_cli("load");
  REQUIRE(missing.exit_code == 1);
  REQUIRE(contains(missing.output, "--file"));
}

TEST_CASE("identical invocations produce byte-identical JSON") {
  const std::string args = "compute bider --algebra gl 1 1 --degree both --json";
  const CliResult first = run_cli(args, false);
  const CliResult second = run_cli(args, false);
  REQUIRE(first.exit_code == 0);
  REQUIRE(second.exit_code == 0);
  REQUIRE_FALSE(first.output.empty());
  REQUIRE(first.output == second.output);
}

TEST_CASE("input errors exit with code 1 and a message") {
  REQUIRE(run_cli("").exit_code != 0);  // a subcommand is required

  const CliResult none = run_cli("info");
  REQUIRE(none.exit_code == 1);
  REQUIRE(contains(none.output, "no algebra given"));

  const CliResult both =
      run_cli("info sl2 --file " + fixture("good_heisenberg.lsa"));
  REQUIRE(both.exit_code == 1);
  REQUIRE(contains(both.output, "not both"));

  const CliResult unknown = run_cli("compute eigenvalues sl2");
  REQUIRE(unknown.exit_code == 1);
  REQUIRE(contains(unknown.output, "unknown compute kind"));

  const CliResult badthm = run_cli("theorem everything sl2");
  REQUIRE(badthm.exit_code == 1);
  REQUIRE(contains(badthm.output, "unknown theorem"));

  const CliResult slmm = run_cli("info --algebra sl 1 1");
  REQUIRE(slmm.exit_code == 1);
  REQUIRE(contains(slmm.output, "sl(m,m)"));

  const CliResult nofile = run_cli("info --file /nonexistent/missing.lsa");
  REQUIRE(nofile.exit_code == 1);
  REQUIRE(contains(nofile.output, "cannot read"));
}
