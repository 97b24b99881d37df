#include "wmsd/error.hpp"

#include <utility>

namespace wmsd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateDomain: return "DegenerateDomain";
    case ErrorCode::NonFiniteBound: return "NonFiniteBound";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
    case ErrorCode::AllZeroWeights: return "AllZeroWeights";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::NonFiniteScore: return "NonFiniteScore";
    case ErrorCode::IdSetMismatch: return "IdSetMismatch";
    case ErrorCode::TooManyCriteria: return "TooManyCriteria";
    case ErrorCode::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorCode::UnattainablePoint: return "UnattainablePoint";
    case ErrorCode::DegenerateCanvas: return "DegenerateCanvas";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::BadNumber: return "BadNumber";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TooManyCriteria:
    case ErrorCode::UnattainablePoint:
    case ErrorCode::DegenerateCanvas:
      return ErrorCategory::computation;
    case ErrorCode::IoError:
      return ErrorCategory::io;
    default:
      return ErrorCategory::validation;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

Error& Error::with_path(std::string path) {
  path_ = std::move(path);
  return *this;
}

Error& Error::with_cell(long row, long column) {
  row_ = row;
  column_ = column;
  return *this;
}

Error& Error::with_id(std::string id) {
  id_ = std::move(id);
  return *this;
}

}  // namespace wmsd
