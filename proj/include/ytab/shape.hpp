#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ytab {

/// Zero-based grid coordinate.
struct Cell {
  int row = 0;
  int col = 0;

  auto operator<=>(const Cell&) const = default;

  /// One-based "(row,col)" rendering, matching the usual tableau notation.
  std::string to_string() const;
};

/// Rectangle with m rows and n columns.
class Shape {
 public:
  Shape(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int cells() const { return rows_ * cols_; }
  bool is_square() const { return rows_ == cols_; }

  bool operator==(const Shape&) const = default;

  std::string to_string() const;

 private:
  int rows_;
  int cols_;
};

/// Anti-diagonal D_i of a rectangle, 1 <= i <= m+n-1.
///
/// D_i collects the cells with col - row = n - i, listed by increasing row:
/// for i <= n it starts at the top row, (1, n-i+1), and for i > n it starts in
/// the first column, (i-n+1, 1). D_1 is the top-right corner, D_n passes
/// through (1,1), and D_{m+n-1} is the bottom-left corner.
class DiagonalSpec {
 public:
  DiagonalSpec(Shape shape, int index);

  const Shape& shape() const { return shape_; }
  int index() const { return index_; }
  /// min(i, m, n, m+n-i).
  int length() const;
  std::vector<Cell> cells() const;

 private:
  Shape shape_;
  int index_;
};

}  // namespace ytab
