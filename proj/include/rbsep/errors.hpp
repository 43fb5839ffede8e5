#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "rbsep/vertex_set.hpp"

namespace rbsep {

enum class ErrorKind {
  IndexOutOfRange,
  InvalidArgument,
  Unseparable,
  NotTwinFree,
  CapExceeded,
  BudgetExceeded,
  NotTriangleFree,
  NotATree,
  XIsLeaf,
  WrongClassSize,
  NoDistinctFamily,
  Uncoverable,
  InvalidParts,
  UncoveredElement,
  BadPivot,
  LiteralCapExceeded,
  TwinFreeUnreachable,
  Parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  [[nodiscard]] ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// A red and a blue vertex with identical closed neighborhoods.
class UnseparableError : public Error {
 public:
  UnseparableError(Vertex red, Vertex blue);
  [[nodiscard]] Vertex red() const { return red_; }
  [[nodiscard]] Vertex blue() const { return blue_; }

 private:
  Vertex red_;
  Vertex blue_;
};

/// Raised by text readers; line numbers are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& msg);
  /// Same error attributed to a file: "path:line: detail".
  ParseError(const std::string& path, const ParseError& inner);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(std::size_t attempted_bound, const std::string& msg)
      : Error(ErrorKind::BudgetExceeded, msg), bound_(attempted_bound) {}
  [[nodiscard]] std::size_t attempted_bound() const { return bound_; }

 private:
  std::size_t bound_;
};

}  // namespace rbsep
