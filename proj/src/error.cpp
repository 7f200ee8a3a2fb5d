#include "bspec/error.hpp"

namespace bspec {

std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotEquivalence: return "NotEquivalence";
    case ErrorKind::NotExtensional: return "NotExtensional";
    case ErrorKind::NotClassConstant: return "NotClassConstant";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotDirected: return "NotDirected";
    case ErrorKind::InconsistentTransport: return "InconsistentTransport";
    case ErrorKind::MissingTransport: return "MissingTransport";
    case ErrorKind::FlavorMismatch: return "FlavorMismatch";
    case ErrorKind::RuleMismatch: return "RuleMismatch";
    case ErrorKind::ValueMismatch: return "ValueMismatch";
    case ErrorKind::WitnessGap: return "WitnessGap";
    case ErrorKind::MissingCertificate: return "MissingCertificate";
    case ErrorKind::IncompatibleThread: return "IncompatibleThread";
    case ErrorKind::ThreadBoundExceeded: return "ThreadBoundExceeded";
    case ErrorKind::NotContinuous: return "NotContinuous";
    case ErrorKind::EnumerationBoundExceeded: return "EnumerationBoundExceeded";
    case ErrorKind::IllFormedCocone: return "IllFormedCocone";
    case ErrorKind::IllFormedCone: return "IllFormedCone";
    case ErrorKind::PoolNotClosed: return "PoolNotClosed";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& msg)
    : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace bspec
