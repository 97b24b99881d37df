#ifndef WMSD_ERROR_HPP_
#define WMSD_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wmsd {

enum class ErrorCode {
  DegenerateDomain,
  NonFiniteBound,
  NegativeWeight,
  NonFiniteWeight,
  AllZeroWeights,
  DuplicateName,
  DuplicateId,
  OutOfDomain,
  NonFiniteValue,
  LengthMismatch,
  WeightMismatch,
  NonFiniteScore,
  IdSetMismatch,
  TooManyCriteria,
  LevelOutOfRange,
  UnattainablePoint,
  DegenerateCanvas,
  InvalidArgument,
  SchemaError,
  HeaderMismatch,
  BadNumber,
  IoError,
};

// Coarse grouping used for process exit codes.
enum class ErrorCategory { validation = 1, computation = 2, io = 3 };

std::string_view to_string(ErrorCode code) noexcept;
ErrorCategory category_of(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

  // Location hints; which ones are set depends on the failing operation.
  const std::string& path() const noexcept { return path_; }
  std::optional<long> row() const noexcept { return row_; }
  std::optional<long> column() const noexcept { return column_; }
  const std::string& id() const noexcept { return id_; }

  Error& with_path(std::string path);
  Error& with_cell(long row, long column);
  Error& with_id(std::string id);

 private:
  ErrorCode code_;
  std::string path_;
  std::optional<long> row_;
  std::optional<long> column_;
  std::string id_;
};

}  // namespace wmsd

#endif  // WMSD_ERROR_HPP_
