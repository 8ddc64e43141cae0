#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "netalg/errors.hpp"

namespace netalg {

/// Shape of the tensor flowing between layers, in element counts.
///
/// Images are stored spatial-first as [height, width, channels]; flat
/// vectors as [d]. Rank is between 1 and 4 and every dim is >= 1.
class TensorShape {
 public:
  TensorShape() = default;
  TensorShape(std::initializer_list<std::int64_t> dims) : dims_(dims) { check(); }
  explicit TensorShape(std::vector<std::int64_t> dims) : dims_(std::move(dims)) { check(); }

  const std::vector<std::int64_t>& dims() const { return dims_; }
  int rank() const { return static_cast<int>(dims_.size()); }
  std::int64_t dim(int i) const { return dims_.at(static_cast<std::size_t>(i)); }

  /// Total number of elements.
  std::int64_t volume() const {
    std::int64_t v = 1;
    for (auto d : dims_) v *= d;
    return v;
  }

  /// Spatial extent: first dim for vectors, height*width otherwise.
  std::int64_t spatial() const {
    if (dims_.empty()) return 1;
    if (dims_.size() == 1) return dims_[0];
    return dims_[0] * dims_[1];
  }

  /// Channel extent: product of everything past the two spatial dims (1 for
  /// vectors and plain matrices).
  std::int64_t channels() const {
    std::int64_t c = 1;
    for (std::size_t i = 2; i < dims_.size(); ++i) c *= dims_[i];
    return c;
  }

  bool is_flat() const { return dims_.size() == 1; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i) s += "x";
      s += std::to_string(dims_[i]);
    }
    return s;
  }

  friend bool operator==(const TensorShape& a, const TensorShape& b) = default;

 private:
  void check() const {
    if (dims_.empty() || dims_.size() > 4)
      throw ShapeError("tensor rank must be between 1 and 4, got " +
                       std::to_string(dims_.size()));
    for (auto d : dims_)
      if (d < 1) throw ShapeError("tensor dim must be >= 1, got " + std::to_string(d));
  }

  std::vector<std::int64_t> dims_;
};

}  // namespace netalg
