#pragma once

#include <string>
#include <utility>
#include <variant>

namespace dtc {

enum class Err {
  UnsupportedGenus,
  BadSlotCount,
  NonTrivalent,
  Disconnected,
  ParityViolation,
  NegativeTwistAtZero,
  PreconditionViolated,
  NegativeReduced,
  NonIntegralTwist,
  NotInImage,
  NotInAnyCone,
  InternalInconsistency,
  ResourceLimit,
  BadInput,
  IoError,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::UnsupportedGenus: return "UnsupportedGenus";
    case Err::BadSlotCount: return "BadSlotCount";
    case Err::NonTrivalent: return "NonTrivalent";
    case Err::Disconnected: return "Disconnected";
    case Err::ParityViolation: return "ParityViolation";
    case Err::NegativeTwistAtZero: return "NegativeTwistAtZero";
    case Err::PreconditionViolated: return "PreconditionViolated";
    case Err::NegativeReduced: return "NegativeReduced";
    case Err::NonIntegralTwist: return "NonIntegralTwist";
    case Err::NotInImage: return "NotInImage";
    case Err::NotInAnyCone: return "NotInAnyCone";
    case Err::InternalInconsistency: return "InternalInconsistency";
    case Err::ResourceLimit: return "ResourceLimit";
    case Err::BadInput: return "BadInput";
    case Err::IoError: return "IoError";
  }
  return "Unknown";
}

struct Error {
  Err code;
  std::string detail;
  std::string to_string() const { return std::string(err_name(code)) + ": " + detail; }
};

// Value-or-error result. Kept minimal on purpose; call ok() before value().
template <class T>
class Outcome {
 public:
  Outcome(T v) : v_(std::move(v)) {}      // NOLINT(google-explicit-constructor)
  Outcome(Error e) : v_(std::move(e)) {}  // NOLINT(google-explicit-constructor)

  bool ok() const { return std::holds_alternative<T>(v_); }
  const T& value() const { return std::get<T>(v_); }
  T& value() { return std::get<T>(v_); }
  const Error& error() const { return std::get<Error>(v_); }

 private:
  std::variant<T, Error> v_;
};

inline Error make_err(Err code, std::string detail) { return Error{code, std::move(detail)}; }

}  // namespace dtc
