#include "ytab/shape.hpp"

#include <algorithm>

#include "ytab/error.hpp"

namespace ytab {

std::string Cell::to_string() const {
  return "(" + std::to_string(row + 1) + "," + std::to_string(col + 1) + ")";
}

Shape::Shape(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) {
    throw DomainError("shape must have at least one row and one column, got " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
}

std::string Shape::to_string() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

DiagonalSpec::DiagonalSpec(Shape shape, int index) : shape_(shape), index_(index) {
  const int last = shape.rows() + shape.cols() - 1;
  if (index < 1 || index > last) {
    throw DomainError("diagonal index " + std::to_string(index) + " outside [1, " +
                      std::to_string(last) + "] for shape " + shape.to_string());
  }
}

int DiagonalSpec::length() const {
  const int m = shape_.rows();
  const int n = shape_.cols();
  return std::min({index_, m, n, m + n - index_});
}

std::vector<Cell> DiagonalSpec::cells() const {
  const int offset = shape_.cols() - index_;  // col - row
  const int first_row = std::max(0, -offset);
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (int r = first_row; r < shape_.rows() && r + offset < shape_.cols(); ++r) {
    out.push_back({r, r + offset});
  }
  return out;
}

}  // namespace ytab
