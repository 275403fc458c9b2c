#pragma once

#include <stdexcept>
#include <string>

namespace qgr {

enum class Err {
  IndexOutOfRange,
  WrongCardinality,
  AmbientMismatch,
  CenterMismatch,
  ZeroDivisor,
  ZeroElement,
  Inhomogeneous,
  NotQuasiCommuting,
  PrereqViolation,
  LengthMismatch,
  RewriteCapExceeded,
  ParseError,
  InvalidConfig,
  NotAUnit,
  Internal,
};

inline const char* err_name(Err k) {
  switch (k) {
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::WrongCardinality: return "WrongCardinality";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::CenterMismatch: return "CenterMismatch";
    case Err::ZeroDivisor: return "ZeroDivisor";
    case Err::ZeroElement: return "ZeroElement";
    case Err::Inhomogeneous: return "Inhomogeneous";
    case Err::NotQuasiCommuting: return "NotQuasiCommuting";
    case Err::PrereqViolation: return "PrereqViolation";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::RewriteCapExceeded: return "RewriteCapExceeded";
    case Err::ParseError: return "ParseError";
    case Err::InvalidConfig: return "InvalidConfig";
    case Err::NotAUnit: return "NotAUnit";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err k, const std::string& msg) { throw Error(k, msg); }

}  // namespace qgr
