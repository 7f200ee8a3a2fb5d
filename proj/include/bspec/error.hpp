#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bspec {

enum class ErrorKind {
  DuplicateElement,
  UnknownElement,
  DomainMismatch,
  NotEquivalence,
  NotExtensional,
  NotClassConstant,
  NotMonotone,
  NotDirected,
  InconsistentTransport,
  MissingTransport,
  FlavorMismatch,
  RuleMismatch,
  ValueMismatch,
  WitnessGap,
  MissingCertificate,
  IncompatibleThread,
  ThreadBoundExceeded,
  NotContinuous,
  EnumerationBoundExceeded,
  IllFormedCocone,
  IllFormedCone,
  PoolNotClosed,
  SyntaxError,
  UnresolvedReference,
  TypeMismatch,
  ConfigError,
};

std::string_view to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& msg);

// One violated law, with a human readable witness.
struct Issue {
  std::string law;
  std::string witness;
};

using Issues = std::vector<Issue>;

}  // namespace bspec
