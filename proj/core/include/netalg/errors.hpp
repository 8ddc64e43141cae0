#pragma once

#include <stdexcept>
#include <string>

namespace netalg {

/// Raised when a JSON document does not conform to the graph schema.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by shape inference when a graph has no consistent shape assignment.
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation is applied to a graph that fails validation.
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on bad numeric input (degenerate fits, empty samples, ...).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace netalg
