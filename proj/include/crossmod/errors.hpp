#ifndef CROSSMOD_ERRORS_HPP
#define CROSSMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crossmod {

/// Result of a report-style validator: either ok, or the first violated
/// axiom instance with a human-readable witness.
struct CheckReport {
  bool ok = true;
  std::string detail;

  static CheckReport pass() { return {true, {}}; }
  static CheckReport fail(std::string d) { return {false, std::move(d)}; }
  explicit operator bool() const { return ok; }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAHomomorphism : Error {
  using Error::Error;
};
struct NotASubgroup : Error {
  using Error::Error;
};
struct NotNormal : Error {
  using Error::Error;
};
struct BoundExceeded : Error {
  using Error::Error;
};
struct UnknownObject : Error {
  using Error::Error;
};
struct NotTransitive : Error {
  using Error::Error;
};
struct MissingComponentChoice : Error {
  using Error::Error;
};
struct NotACovering : Error {
  using Error::Error;
};
struct HypothesisViolated : Error {
  using Error::Error;
};
struct InterchangeViolated : Error {
  using Error::Error;
};
struct DegreeTooHigh : Error {
  using Error::Error;
};
struct NotACocycle : Error {
  using Error::Error;
};
struct NotEquivariant : Error {
  using Error::Error;
};
struct InvalidFactorSet : Error {
  using Error::Error;
};
struct ObstructionNonzero : Error {
  using Error::Error;
};
struct NotInvariant : Error {
  using Error::Error;
};
struct ValidationFailed : Error {
  using Error::Error;
};

}  // namespace crossmod

#endif
