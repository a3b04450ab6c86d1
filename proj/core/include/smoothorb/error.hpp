#pragma once

#include <stdexcept>
#include <string>

namespace smoothorb {

enum class Errc {
  // malformed input
  EmptyCollection,
  WrongCardinality,
  ElementOutOfRange,
  DuplicateBasis,
  RankOutOfRange,
  GroundSetTooLarge,
  Parse,
  // domain failures
  InvalidMatroid,
  NotABasis,
  EmptyMinor,
  OverlappingMinor,
  UnbalancedExchangeSet,
  Precondition,
  RankDeficient,
  TooLarge,
  SplitMismatch,
  // a checked theorem or postcondition failed
  Internal,
};

const char* errc_name(Errc code) noexcept;

/// True for codes that describe malformed input rather than a mathematical
/// property of well-formed input.
constexpr bool is_input_error(Errc code) noexcept {
  return code <= Errc::Parse;
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace smoothorb
