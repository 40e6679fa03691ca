#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace lsa {

/// One failed check of an algebraic identity or structural invariant,
/// recorded as data rather than thrown. `where` holds the basis indices the
/// check was evaluated at; `lhs`/`rhs` are the rendered values of both sides.
struct Violation {
  enum class Kind {
    skew_symmetry,
    grading,
    jacobi,
    bilinear_skew,
    bilinear_grading,
    biderivation_identity,
    cross_bracket,
    perfect_identity,
    second_slot_leibniz,
    range_containment,
    derived_pair_vanishing,
    map_grading,
    derivation_identity,
    centroid_identity,
    commuting_identity,
    double_bracket,
  };

  Kind kind;
  std::vector<Eigen::Index> where;
  std::string lhs;
  std::string rhs;
};

const char* violation_kind_name(Violation::Kind kind);
std::string describe(const Violation& v);

/// Bad arguments from the caller: dimension mismatches, unknown catalog
/// names, malformed parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not conform to the LSA file format. Line numbers are
/// 1-based; 0 means the failure is not tied to a particular line.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, int line)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + message
                            : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Structure constants that violate the bracket axioms; carries the full
/// validation report.
class ValidationError : public InputError {
 public:
  explicit ValidationError(std::vector<Violation> report);

  const std::vector<Violation>& report() const { return report_; }

 private:
  std::vector<Violation> report_;
};

/// A stated hypothesis of an operation does not hold for the given algebra
/// (e.g. asking for the centroid factorization of a non-perfect algebra).
/// The message names the failed flag.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// A machine-checked statement failed on concrete data. For valid inputs
/// this must never happen; it is a critical finding, kept distinct from bad
/// input so it can never be silently absorbed.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lsa
