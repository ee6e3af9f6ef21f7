#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace omdet {

enum class Err {
  EmptyCircuit,
  NotAntichain,
  EliminationFailure,
  NotABasis,
  ElementInBasis,
  BadParameters,
  TooLarge,
  UnderlyingMismatch,
  SignedEliminationFailure,
  InconsistentPropagation,
  DegenerateConfiguration,
  NotACircuit,
  NotCorankTwo,
  NotOrientable,
  NotConnected,
  BudgetExceeded,
  SearchBudgetExceeded,
  ConstructionCheckFailed,
  ParseError,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::EmptyCircuit: return "EmptyCircuit";
    case Err::NotAntichain: return "NotAntichain";
    case Err::EliminationFailure: return "EliminationFailure";
    case Err::NotABasis: return "NotABasis";
    case Err::ElementInBasis: return "ElementInBasis";
    case Err::BadParameters: return "BadParameters";
    case Err::TooLarge: return "TooLarge";
    case Err::UnderlyingMismatch: return "UnderlyingMismatch";
    case Err::SignedEliminationFailure: return "SignedEliminationFailure";
    case Err::InconsistentPropagation: return "InconsistentPropagation";
    case Err::DegenerateConfiguration: return "DegenerateConfiguration";
    case Err::NotACircuit: return "NotACircuit";
    case Err::NotCorankTwo: return "NotCorankTwo";
    case Err::NotOrientable: return "NotOrientable";
    case Err::NotConnected: return "NotConnected";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Err::ConstructionCheckFailed: return "ConstructionCheckFailed";
    case Err::ParseError: return "ParseError";
  }
  return "UnknownError";
}

class OmdetError : public std::runtime_error {
 public:
  OmdetError(Err code, const std::string& detail)
      : std::runtime_error(std::string(err_name(code)) + ": " + detail),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

// Knobs for the exponential searches. A value of 0 means "unlimited".
struct Budget {
  uint64_t max_orientations = 1u << 20;
  uint64_t max_nodes = 200'000'000;  // backtracking / subset-scan node cap
  int threads = 1;

  void charge(uint64_t& counter, uint64_t amount, const char* what) const {
    counter += amount;
    if (max_nodes && counter > max_nodes)
      throw OmdetError(Err::BudgetExceeded, what);
  }
};

}  // namespace omdet
