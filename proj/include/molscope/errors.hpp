#pragma once

#include <stdexcept>
#include <string>

namespace molscope {

enum class ErrorKind {
  BadShape,
  BadSymbol,
  DuplicateInRow,
  DuplicateInColumn,
  SizeMismatch,
  NotOrthogonal,
  InvalidColumns,
  WidthExceeded,
  CatalogueOverflow,
  NoTransversals,
  OutOfRange,
  NonIntegral,
  UnsupportedOrder,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library. `index()` carries the offending
// row/column/line where one exists, otherwise -1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int index = -1)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        index_(index),
        message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  int index() const noexcept { return index_; }
  // what() without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  int index_;
  std::string message_;
};

}  // namespace molscope
