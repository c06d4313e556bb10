#ifndef TSPEC_ERROR_HPP
#define TSPEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tspec {

enum class Errc {
  AmbientMismatch,
  DimensionMismatch,
  NotSquare,
  JacobiViolation,
  NotACharacter,
  NotSolvable,
  NotNilpotent,
  NotSemisimple,
  NonSplit,
  Unsupported,
  AlgebraMismatch,
  SideMismatch,
  DifferentialSquareNonzero,
  RankTooLarge,
  NotACocycle,
  BaseMismatch,
  NotASubalgebra,
  UnknownName,
  BadParams,
  Parse,
};

inline std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::JacobiViolation: return "JacobiViolation";
    case Errc::NotACharacter: return "NotACharacter";
    case Errc::NotSolvable: return "NotSolvable";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotSemisimple: return "NotSemisimple";
    case Errc::NonSplit: return "NonSplit";
    case Errc::Unsupported: return "Unsupported";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::SideMismatch: return "SideMismatch";
    case Errc::DifferentialSquareNonzero: return "DifferentialSquareNonzero";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NotASubalgebra: return "NotASubalgebra";
    case Errc::UnknownName: return "UnknownName";
    case Errc::BadParams: return "BadParams";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this type; `code()` is the
/// machine-readable kind, `what()` the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tspec

#endif  // TSPEC_ERROR_HPP
