#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ytab/shape.hpp"

namespace ytab {

/// Rectangular grid of values stored row-major. Carries no validity
/// guarantee beyond its dimensions; see validate_discrete/validate_continuous.
template <typename T>
class Tableau {
 public:
  using value_type = T;

  Tableau(Shape shape, std::vector<T> row_major);
  /// Throws StructuralError when the rows are ragged or disagree with `shape`.
  static Tableau from_rows(Shape shape, const std::vector<std::vector<T>>& rows);
  /// Infers the shape from the nested rows.
  static Tableau from_rows(const std::vector<std::vector<T>>& rows);

  const Shape& shape() const { return shape_; }
  T operator()(int row, int col) const { return values_[index(row, col)]; }
  T& operator()(int row, int col) { return values_[index(row, col)]; }
  T operator[](const Cell& c) const { return (*this)(c.row, c.col); }
  T& operator[](const Cell& c) { return (*this)(c.row, c.col); }

  std::span<const T> values() const { return values_; }
  std::vector<std::vector<T>> rows() const;

  bool operator==(const Tableau&) const = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(shape_.cols()) +
           static_cast<std::size_t>(col);
  }

  Shape shape_;
  std::vector<T> values_;
};

using DiscreteTableau = Tableau<int>;
using ContinuousTableau = Tableau<double>;

extern template class Tableau<int>;
extern template class Tableau<double>;

enum class ViolationKind {
  kRowOrder,     // entry not below its right neighbour
  kColumnOrder,  // entry not below the entry underneath
  kOutOfRange,   // discrete: outside {1..mn}; continuous: outside [0,1]
  kDuplicate,    // discrete: value repeated
};

struct Violation {
  ViolationKind kind;
  Cell first;
  std::optional<Cell> second;

  bool operator==(const Violation&) const = default;
  std::string describe() const;
};

/// Every violated constraint of a standard filling; empty iff T is a standard
/// Young tableau of its shape.
std::vector<Violation> validate_discrete(const DiscreteTableau& t);

/// Range violations come first, then ordering violations. Equal neighbours
/// count as violations. Throws StructuralError on NaN or infinite entries.
std::vector<Violation> validate_continuous(const ContinuousTableau& t);

/// {"m":..,"n":..,"entries":[[..],..]}
template <typename T>
nlohmann::json to_json(const Tableau<T>& t);
template <typename T>
Tableau<T> tableau_from_json(const nlohmann::json& j);

/// One CSV line per tableau row.
template <typename T>
void write_csv(std::ostream& os, const Tableau<T>& t);

}  // namespace ytab
