#pragma once

#include <stdexcept>
#include <string>

namespace arrpi {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Geometry errors.
struct ParallelLinesError : Error {
  explicit ParallelLinesError(const std::string& msg) : Error(msg) {}
};

struct IdenticalLinesError : Error {
  explicit IdenticalLinesError(const std::string& msg) : Error(msg) {}
};

// Two distinct intersection points share an x-coordinate; the caller must
// shear the arrangement first.
struct NotGenericError : Error {
  explicit NotGenericError(const std::string& msg) : Error(msg) {}
};

// Guards against arithmetic bugs: incident lines must occupy consecutive
// positions in the fiber just right of their intersection point.
struct InternalInconsistencyError : Error {
  explicit InternalInconsistencyError(const std::string& msg) : Error(msg) {}
};

// Braid / word errors.
struct IndexOutOfRangeError : Error {
  explicit IndexOutOfRangeError(const std::string& msg) : Error(msg) {}
};

struct StrandMismatchError : Error {
  explicit StrandMismatchError(const std::string& msg) : Error(msg) {}
};

// Presentation errors.
struct NotInvertibleSubstitutionError : Error {
  explicit NotInvertibleSubstitutionError(const std::string& msg) : Error(msg) {}
};

struct BudgetExceededError : Error {
  BudgetExceededError(const std::string& msg, long long required)
      : Error(msg), required_budget(required) {}
  long long required_budget;
};

// Classification errors.
struct NotCoveredError : Error {
  NotCoveredError(const std::string& msg, int class_id)
      : Error(msg), offending_class(class_id) {}
  int offending_class;
};

struct NotTransverseError : Error {
  explicit NotTransverseError(const std::string& msg) : Error(msg) {}
};

}  // namespace arrpi
