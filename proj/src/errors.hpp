#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdt {

// Error categories shared by the C++ core and the C API.
enum class Errc {
  kInvalidArgument,
  kParse,
  kIndexRange,
  kSignatureMismatch,
  kNotInvertible,
  kStructure,
  kLevelBound,
  kDivisionByZero,
  kJson,
};

class CdError : public std::runtime_error {
 public:
  CdError(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Parse failure with the byte offset of the offending token and the token
// kinds that would have been accepted there.
class ParseError : public CdError {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : CdError(Errc::kParse, what), offset_(offset), expected_(std::move(expected)) {}
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace cdt
