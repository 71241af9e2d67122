#pragma once

#include <stdexcept>
#include <string>

namespace zcross {

enum class ErrorKind {
  NoSnap,
  NotSubgroup,
  NotOdd,
  NotIsotropic,
  EvenOrder,
  Degenerate,
  NotEven,
  NotPositiveDefinite,
  NotInvolution,
  NotIsometry,
  NotCocycle,
  AssumptionViolated,
  NotStable,
  NotStronglyEven,
  BadD0,
  NonIntegerMultiplicity,
  InvalidInput,
  Overflow,
};

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NoSnap: return "NoSnap";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::NotOdd: return "NotOdd";
    case ErrorKind::NotIsotropic: return "NotIsotropic";
    case ErrorKind::EvenOrder: return "EvenOrder";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotEven: return "NotEven";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotIsometry: return "NotIsometry";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::AssumptionViolated: return "AssumptionViolated";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::NotStronglyEven: return "NotStronglyEven";
    case ErrorKind::BadD0: return "BadD0";
    case ErrorKind::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace zcross
