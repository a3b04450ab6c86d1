#include "smoothorb/error.hpp"

namespace smoothorb {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyCollection: return "empty collection";
    case Errc::WrongCardinality: return "wrong cardinality";
    case Errc::ElementOutOfRange: return "element out of range";
    case Errc::DuplicateBasis: return "duplicate basis";
    case Errc::RankOutOfRange: return "rank out of range";
    case Errc::GroundSetTooLarge: return "ground set too large";
    case Errc::Parse: return "parse error";
    case Errc::InvalidMatroid: return "invalid matroid";
    case Errc::NotABasis: return "not a basis";
    case Errc::EmptyMinor: return "empty minor";
    case Errc::OverlappingMinor: return "overlapping minor";
    case Errc::UnbalancedExchangeSet: return "unbalanced exchange set";
    case Errc::Precondition: return "precondition violated";
    case Errc::RankDeficient: return "rank deficient";
    case Errc::TooLarge: return "too large";
    case Errc::SplitMismatch: return "split mismatch";
    case Errc::Internal: return "internal error";
  }
  return "unknown";
}

}  // namespace smoothorb
