#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lsa/biderivations.hpp"
#include "lsa/catalog.hpp"
#include "lsa/invariants.hpp"
#include "lsa/map_spaces.hpp"
#include "lsa/report.hpp"

namespace {

using namespace lsa;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitTheoremViolation = 2;

struct AlgebraArgs {
  std::vector<std::string> positional;
  std::vector<std::string> named;
  std::string file;
};

void attach_algebra_options(CLI::App* sub, AlgebraArgs& args) {
  sub->add_option("tokens", args.positional,
                  "algebra name followed by integer parameters");
  sub->add_option("--algebra", args.named,
                  "algebra name followed by integer parameters")
      ->expected(-1);
  sub->add_option("--file", args.file, "path to an .lsa structure file");
}

Index parse_param(const std::string& token) {
  if (token.empty()) throw InputError("empty parameter");
  for (char ch : token)
    if (ch < '0' || ch > '9')
      throw InputError("parameter '" + token + "' is not a nonnegative integer");
  return static_cast<Index>(std::stoll(token));
}

std::string describe_source(const AlgebraArgs& args) {
  if (!args.file.empty()) return args.file;
  const auto& tokens = args.positional.empty() ? args.named : args.positional;
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += " ";
    out += t;
  }
  return out;
}

LieSuperalgebra build_algebra(const AlgebraArgs& args) {
  const bool have_tokens = !args.positional.empty() || !args.named.empty();
  if (!args.file.empty() && have_tokens)
    throw InputError("give either an algebra name or --file, not both");
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw InputError("cannot read file '" + args.file + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return load(text.str(), args.file);
  }
  if (!have_tokens)
    throw InputError("no algebra given; use name+params, --algebra, or --file");
  if (!args.positional.empty() && !args.named.empty())
    throw InputError("give the algebra positionally or via --algebra, not both");
  const auto& tokens = args.positional.empty() ? args.named : args.positional;
  std::vector<Index> params;
  for (size_t i = 1; i < tokens.size(); ++i)
    params.push_back(parse_param(tokens[i]));
  return make(tokens[0], params);
}

void add_algebra_section(Report& report, const LieSuperalgebra& L,
                         const std::string& source) {
  report.add("algebra", "name", L.name());
  report.add("algebra", "source", source);
  report.add("algebra", "dim_even", static_cast<long long>(L.dim_even()));
  report.add("algebra", "dim_odd", static_cast<long long>(L.dim_odd()));
  report.add("algebra", "dim", static_cast<long long>(L.dim()));
}

void add_hypotheses_section(Report& report, const HypothesisReport& h) {
  report.add("hypotheses", "is_perfect", h.is_perfect);
  report.add("hypotheses", "is_centerless", h.is_centerless);
  report.add("hypotheses", "derived_dim", static_cast<long long>(h.derived_dim));
  report.add("hypotheses", "center_dim", static_cast<long long>(h.center_dim));
  report.add("hypotheses", "centralizer_of_derived_dim",
             static_cast<long long>(h.centralizer_of_derived_dim));
}

std::vector<std::string> describe_all(const std::vector<Violation>& violations) {
  std::vector<std::string> out;
  out.reserve(violations.size());
  for (const auto& v : violations) out.push_back(describe(v));
  return out;
}

// Nonzero entries of a bilinear basis element, independent pairs only.
std::string bilinear_entries(const LieSuperalgebra& L,
                             const GradedBilinearMap& delta) {
  std::string out;
  for (Index i = 0; i < L.dim(); ++i)
    for (Index j = i; j < L.dim(); ++j)
      for (Index k = 0; k < L.dim(); ++k) {
        const Rational& v = delta.slices[i](k, j);
        if (v == 0) continue;
        if (!out.empty()) out += "  ";
        out += "d(" + std::to_string(i) + "," + std::to_string(j) + "," +
               std::to_string(k) + ")=" + v.str();
      }
  return out.empty() ? "0" : out;
}

std::string matrix_entries(const RatMatrix& m) {
  std::string out;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      if (!out.empty()) out += "  ";
      out += "m(" + std::to_string(r) + "," + std::to_string(c) +
             ")=" + m(r, c).str();
    }
  return out.empty() ? "0" : out;
}

std::vector<Parity> degrees_from_flag(const std::string& degree) {
  if (degree == "even") return {Parity::even};
  if (degree == "odd") return {Parity::odd};
  if (degree == "both") return {Parity::even, Parity::odd};
  throw InputError("--degree must be even, odd, or both");
}

void emit(const Report& report, bool json) {
  std::cout << (json ? report.render_json() : report.render_text());
}

int run_info(const AlgebraArgs& args, bool json) {
  const LieSuperalgebra L = build_algebra(args);
  Report report;
  add_algebra_section(report, L, describe_source(args));
  add_hypotheses_section(report, hypotheses(L));
  emit(report, json);
  return kExitOk;
}

int run_verify(const AlgebraArgs& args, bool json) {
  Report report;
  try {
    const LieSuperalgebra L = build_algebra(args);
    add_algebra_section(report, L, describe_source(args));
    report.add("validation", "valid", true);
    report.add_list("validation", "violations", {});
    emit(report, json);
    return kExitOk;
  } catch (const ValidationError& e) {
    report.add("algebra", "source", describe_source(args));
    report.add("validation", "valid", false);
    report.add_list("validation", "violations", describe_all(e.report()));
    emit(report, json);
    return kExitInput;
  }
}

int run_compute(const std::string& kind, const AlgebraArgs& args,
                const std::string& degree, bool json) {
  const LieSuperalgebra L = build_algebra(args);
  Report report;
  add_algebra_section(report, L, describe_source(args));
  report.add("compute", "kind", kind);

  // Keys reuse the kind token the caller passed, so scripts can look up
  // "dimensions.der_even" after asking for "der".
  const auto add_map_space = [&](const MapSpace& space) {
    const std::string tag = kind + "_" + parity_name(space.degree);
    report.add("dimensions", tag, static_cast<long long>(space.dim()));
    std::vector<std::string> rendered;
    for (const auto& f : space.basis) rendered.push_back(matrix_entries(f.matrix));
    report.add_list("basis", tag, rendered);
  };
  const auto add_bilinear_space = [&](const BiderivationSpace& space,
                                      const std::string& label) {
    const std::string tag = parity_name(space.degree);
    report.add("dimensions", label + "_" + tag,
               static_cast<long long>(space.dim()));
    std::vector<std::string> rendered;
    for (const auto& d : space.basis) rendered.push_back(bilinear_entries(L, d));
    report.add_list("basis", label + "_" + tag, rendered);
  };

  if (kind == "commuting") {
    add_map_space(commuting_map_space(L));
  } else {
    for (Parity tau : degrees_from_flag(degree)) {
      if (kind == "der") {
        add_map_space(derivation_space(L, tau));
      } else if (kind == "centroid") {
        add_map_space(centroid_space(L, tau));
      } else if (kind == "bider") {
        add_bilinear_space(biderivation_space(L, tau), "bider");
      } else if (kind == "special") {
        add_bilinear_space(special_biderivation_space(L, tau), "special");
      } else {
        throw InputError("unknown compute kind '" + kind +
                         "'; expected der, centroid, commuting, bider, or special");
      }
    }
  }
  emit(report, json);
  return kExitOk;
}

// Theorem subcommands share one certificate shape: pass, fail (exit 2), or
// not-applicable with the unmet hypothesis (exit 0).
int run_theorem(const std::string& statement, const AlgebraArgs& args,
                bool json) {
  const LieSuperalgebra L = build_algebra(args);
  Report report;
  add_algebra_section(report, L, describe_source(args));
  const HypothesisReport h = hypotheses(L);
  add_hypotheses_section(report, h);
  report.add("certificate", "statement", statement);

  bool passed = true;
  std::vector<std::string> violations;

  try {
    if (statement == "bider-centroid") {
      if (!h.is_perfect)
        throw PreconditionError("is_perfect fails: the algebra is not equal "
                                "to its derived algebra");
      if (!h.is_centerless)
        throw PreconditionError("is_centerless fails: the center is nonzero");
      for (Parity tau : {Parity::even, Parity::odd}) {
        const auto space = biderivation_space(L, tau);
        const auto centroid = centroid_space(L, tau);
        report.add("dimensions",
                   std::string("bider_") + parity_name(tau),
                   static_cast<long long>(space.dim()));
        report.add("dimensions",
                   std::string("centroid_") + parity_name(tau),
                   static_cast<long long>(centroid.dim()));
        if (space.dim() != centroid.dim()) {
          passed = false;
          violations.push_back(std::string("dim mismatch at degree ") +
                               parity_name(tau));
        }
        for (const auto& delta : space.basis)
          (void)decompose_via_centroid(L, delta);  // throws on failure
      }
    } else if (statement == "commuting-centroid") {
      const auto cert = verify_commuting_in_centroid(L);
      passed = cert.passed;
      violations = describe_all(cert.violations);
    } else if (statement == "special-zero") {
      if (!h.is_perfect)
        throw PreconditionError("is_perfect fails: the algebra is not equal "
                                "to its derived algebra");
      if (!h.is_centerless)
        throw PreconditionError("is_centerless fails: the center is nonzero");
      for (Parity tau : {Parity::even, Parity::odd}) {
        const auto space = special_biderivation_space(L, tau);
        report.add("dimensions",
                   std::string("special_") + parity_name(tau),
                   static_cast<long long>(space.dim()));
        if (space.dim() != 0) {
          passed = false;
          violations.push_back(std::string("nonzero special space at degree ") +
                               parity_name(tau));
        }
      }
    } else if (statement == "lemma-suite") {
      for (Parity tau : {Parity::even, Parity::odd}) {
        const auto space = biderivation_space(L, tau);
        report.add("dimensions", std::string("bider_") + parity_name(tau),
                   static_cast<long long>(space.dim()));
        long long second_slot_violations = 0;
        for (const auto& delta : space.basis) {
          for (const auto& v : check_cross_identity(L, delta)) {
            passed = false;
            violations.push_back(describe(v));
          }
          const auto mem = residual_membership(L, delta);
          if (!mem.all_contained) {
            passed = false;
            for (const auto& f : mem.failures)
              violations.push_back(
                  "centralizer residual escapes at (" +
                  std::to_string(f.triple[0]) + "," + std::to_string(f.triple[1]) +
                  "," + std::to_string(f.triple[2]) + "): stated residual " +
                  f.stated_residual + " (variant contained: " +
                  (f.variant_contained ? "yes" : "no") + ", variant residual " +
                  f.variant_residual + ")");
          }
          if (h.is_perfect)
            for (const auto& v : check_perfect_identity(L, delta)) {
              passed = false;
              violations.push_back(describe(v));
            }
          (void)induced_on_quotient(L, delta);  // throws on failure
          second_slot_violations +=
              static_cast<long long>(check_second_slot_leibniz(L, delta).size());
        }
        // Status only: this identity is an assumption, not a consequence.
        report.add("status",
                   std::string("second_slot_leibniz_violations_") +
                       parity_name(tau),
                   second_slot_violations);
      }
    } else {
      throw InputError("unknown theorem '" + statement +
                       "'; expected bider-centroid, commuting-centroid, "
                       "special-zero, or lemma-suite");
    }
  } catch (const PreconditionError& e) {
    report.add("certificate", "status", "not-applicable");
    report.add("certificate", "reason", e.what());
    emit(report, json);
    return kExitOk;
  }

  report.add("certificate", "status", passed ? "pass" : "fail");
  report.add_list("certificate", "violations", violations);
  emit(report, json);
  return passed ? kExitOk : kExitTheoremViolation;
}

int run_dump(const AlgebraArgs& args) {
  const LieSuperalgebra L = build_algebra(args);
  std::cout << dump(L);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact rational verifier for graded bracket algebras: derivation, "
      "centroid, commuting-map, and bilinear solution spaces with "
      "machine-checked structure statements"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "emit the machine-readable report");

  AlgebraArgs info_args, verify_args, compute_args, theorem_args, dump_args,
      load_args;
  std::string compute_kind, theorem_statement, degree = "both";

  CLI::App* info = app.add_subcommand("info", "dimensions and structural flags");
  attach_algebra_options(info, info_args);

  CLI::App* verify =
      app.add_subcommand("verify", "check the bracket axioms, report violations");
  attach_algebra_options(verify, verify_args);

  CLI::App* compute = app.add_subcommand(
      "compute", "solve one solution space: der, centroid, commuting, bider, special");
  compute->add_option("kind", compute_kind)->required();
  attach_algebra_options(compute, compute_args);
  compute->add_option("--degree", degree, "even, odd, or both (default both)");

  CLI::App* theorem = app.add_subcommand(
      "theorem",
      "check one statement: bider-centroid, commuting-centroid, special-zero, "
      "lemma-suite");
  theorem->add_option("statement", theorem_statement)->required();
  attach_algebra_options(theorem, theorem_args);

  CLI::App* dump_cmd =
      app.add_subcommand("dump", "print the canonical structure-constants text");
  attach_algebra_options(dump_cmd, dump_args);

  CLI::App* load_cmd = app.add_subcommand(
      "load", "read a structure file, validate it, and reprint canonically");
  attach_algebra_options(load_cmd, load_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return run_info(info_args, json);
    if (verify->parsed()) return run_verify(verify_args, json);
    if (compute->parsed())
      return run_compute(compute_kind, compute_args, degree, json);
    if (theorem->parsed())
      return run_theorem(theorem_statement, theorem_args, json);
    if (dump_cmd->parsed()) return run_dump(dump_args);
    if (load_cmd->parsed()) {
      if (load_args.file.empty())
        throw InputError("load requires --file");
      return run_dump(load_args);
    }
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kExitTheoremViolation;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
