#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace projframe {

enum class ErrorKind {
  invalid_order,
  invalid_group,
  dimension_mismatch,
  cocycle_invalid,
  invalid_input,
  group_mismatch,
  unsupported,
  rep_invalid,
  incomparable,
  inconsistent_input,
  not_galpha_matrix,
  internal_consistency,
  shape_mismatch,
  index_out_of_range,
  incomplete_set,
  diagonalization_failure,
  precondition_violation,
  numerical_degeneracy,
  not_a_gramian,
  schema_error,
  io_error,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_order: return "invalid-order";
    case ErrorKind::invalid_group: return "invalid-group";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::cocycle_invalid: return "cocycle-invalid";
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::group_mismatch: return "group-mismatch";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::rep_invalid: return "rep-invalid";
    case ErrorKind::incomparable: return "incomparable";
    case ErrorKind::inconsistent_input: return "inconsistent-input";
    case ErrorKind::not_galpha_matrix: return "not-a-galpha-matrix";
    case ErrorKind::internal_consistency: return "internal-consistency";
    case ErrorKind::shape_mismatch: return "shape-mismatch";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::incomplete_set: return "incomplete-set";
    case ErrorKind::diagonalization_failure: return "diagonalization-failure";
    case ErrorKind::precondition_violation: return "precondition-violation";
    case ErrorKind::numerical_degeneracy: return "numerical-degeneracy";
    case ErrorKind::not_a_gramian: return "not-a-gramian";
    case ErrorKind::schema_error: return "schema-error";
    case ErrorKind::io_error: return "io-error";
  }
  return "unknown";
}

/// Library-wide exception. `witness` carries the offending indices (group
/// elements, matrix entries, ...) when the failure has a concrete location.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

/// Outcome of a validator. Validators never throw on a negative verdict.
struct ValidationReport {
  bool ok = true;
  std::string message;
  std::vector<std::size_t> witness;
  double max_deviation = 0.0;

  explicit operator bool() const noexcept { return ok; }
};

inline void require(const ValidationReport& report, ErrorKind kind) {
  if (!report.ok) throw Error(kind, report.message, report.witness);
}

}  // namespace projframe
