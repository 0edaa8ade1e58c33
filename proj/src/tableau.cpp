#include "ytab/tableau.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "ytab/error.hpp"

namespace ytab {

template <typename T>
Tableau<T>::Tableau(Shape shape, std::vector<T> row_major)
    : shape_(shape), values_(std::move(row_major)) {
  if (values_.size() != static_cast<std::size_t>(shape_.cells())) {
    throw StructuralError("tableau of shape " + shape_.to_string() + " needs " +
                          std::to_string(shape_.cells()) + " entries, got " +
                          std::to_string(values_.size()));
  }
}

template <typename T>
Tableau<T> Tableau<T>::from_rows(Shape shape, const std::vector<std::vector<T>>& rows) {
  if (rows.size() != static_cast<std::size_t>(shape.rows())) {
    throw StructuralError("expected " + std::to_string(shape.rows()) + " rows, got " +
                          std::to_string(rows.size()));
  }
  std::vector<T> flat;
  flat.reserve(static_cast<std::size_t>(shape.cells()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != static_cast<std::size_t>(shape.cols())) {
      throw StructuralError("row " + std::to_string(r + 1) + " has " +
                            std::to_string(rows[r].size()) + " entries, expected " +
                            std::to_string(shape.cols()));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return Tableau(shape, std::move(flat));
}

template <typename T>
Tableau<T> Tableau<T>::from_rows(const std::vector<std::vector<T>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw StructuralError("empty grid");
  }
  return from_rows(Shape(static_cast<int>(rows.size()), static_cast<int>(rows.front().size())),
                   rows);
}

template <typename T>
std::vector<std::vector<T>> Tableau<T>::rows() const {
  std::vector<std::vector<T>> out(static_cast<std::size_t>(shape_.rows()));
  for (int r = 0; r < shape_.rows(); ++r) {
    out[r].assign(values_.begin() + static_cast<std::ptrdiff_t>(index(r, 0)),
                  values_.begin() + static_cast<std::ptrdiff_t>(index(r, 0) + shape_.cols()));
  }
  return out;
}

template class Tableau<int>;
template class Tableau<double>;

std::string Violation::describe() const {
  std::string what;
  switch (kind) {
    case ViolationKind::kRowOrder: what = "row order"; break;
    case ViolationKind::kColumnOrder: what = "column order"; break;
    case ViolationKind::kOutOfRange: what = "out of range"; break;
    case ViolationKind::kDuplicate: what = "duplicate value"; break;
  }
  std::string where = first.to_string();
  if (second) where += "-" + second->to_string();
  return what + " at " + where;
}

namespace {

template <typename T>
void append_order_violations(const Tableau<T>& t, std::vector<Violation>& out) {
  const Shape& s = t.shape();
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) {
      if (c + 1 < s.cols() && !(t(r, c) < t(r, c + 1))) {
        out.push_back({ViolationKind::kRowOrder, {r, c}, Cell{r, c + 1}});
      }
      if (r + 1 < s.rows() && !(t(r, c) < t(r + 1, c))) {
        out.push_back({ViolationKind::kColumnOrder, {r, c}, Cell{r + 1, c}});
      }
    }
  }
}

}  // namespace

std::vector<Violation> validate_discrete(const DiscreteTableau& t) {
  std::vector<Violation> out;
  const Shape& s = t.shape();
  const int total = s.cells();
  std::vector<std::optional<Cell>> seen(static_cast<std::size_t>(total) + 1);
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) {
      const int v = t(r, c);
      if (v < 1 || v > total) {
        out.push_back({ViolationKind::kOutOfRange, {r, c}, std::nullopt});
      } else if (seen[v]) {
        out.push_back({ViolationKind::kDuplicate, *seen[v], Cell{r, c}});
      } else {
        seen[v] = Cell{r, c};
      }
    }
  }
  append_order_violations(t, out);
  return out;
}

std::vector<Violation> validate_continuous(const ContinuousTableau& t) {
  std::vector<Violation> out;
  const Shape& s = t.shape();
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) {
      const double v = t(r, c);
      if (!std::isfinite(v)) {
        throw StructuralError("non-finite entry at " + Cell{r, c}.to_string());
      }
      if (v < 0.0 || v > 1.0) {
        out.push_back({ViolationKind::kOutOfRange, {r, c}, std::nullopt});
      }
    }
  }
  append_order_violations(t, out);
  return out;
}

template <typename T>
nlohmann::json to_json(const Tableau<T>& t) {
  return {{"m", t.shape().rows()}, {"n", t.shape().cols()}, {"entries", t.rows()}};
}

template <typename T>
Tableau<T> tableau_from_json(const nlohmann::json& j) {
  try {
    const Shape shape(j.at("m").get<int>(), j.at("n").get<int>());
    return Tableau<T>::from_rows(shape, j.at("entries").get<std::vector<std::vector<T>>>());
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string("malformed tableau JSON: ") + e.what());
  }
}

template <typename T>
void write_csv(std::ostream& os, const Tableau<T>& t) {
  const auto precision = os.precision();
  if constexpr (std::is_floating_point_v<T>) os << std::setprecision(17);
  for (int r = 0; r < t.shape().rows(); ++r) {
    for (int c = 0; c < t.shape().cols(); ++c) {
      if (c) os << ',';
      os << t(r, c);
    }
    os << '\n';
  }
  os.precision(precision);
}

template nlohmann::json to_json(const Tableau<int>&);
template nlohmann::json to_json(const Tableau<double>&);
template Tableau<int> tableau_from_json<int>(const nlohmann::json&);
template Tableau<double> tableau_from_json<double>(const nlohmann::json&);
template void write_csv(std::ostream&, const Tableau<int>&);
template void write_csv(std::ostream&, const Tableau<double>&);

}  // namespace ytab
