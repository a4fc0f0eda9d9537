#pragma once

#include <stdexcept>
#include <string>

namespace tck {

enum class ErrorCode {
  // validation
  NotAcyclic,
  ParallelArcs,
  BadDegree,
  NoRoot,
  MultipleRoots,
  DuplicateLabel,
  UnlabeledLeaf,
  // structural preconditions
  NotTreeChild,
  NotReticulationArc,
  NotReticulation,
  UnknownArc,
  ArcVanished,
  // tree operations
  UnknownLabel,
  EmptySubset,
  TooFewLabels,
  BadOrder,
  // scale guards
  TooManyReticulations,
  LabelMismatch,
  ScaleExceeded,
  OutOfRange,
  // octopus specs
  SpecInconsistent,
  KIsOne,
  // parsing
  SyntaxError,
  TagArityError,
  // should-never-happen conditions proven impossible for valid inputs
  InternalAssertionFailed,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) { throw Error(code, msg); }

}  // namespace tck
