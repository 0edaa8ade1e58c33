#include "ytab/enumerate.hpp"

#include "ytab/error.hpp"

namespace ytab {

SytEnumeration::SytEnumeration(Shape shape, std::uint64_t cap)
    : shape_(shape), count_(0), row_len_(static_cast<std::size_t>(shape.rows()), 0),
      entries_(static_cast<std::size_t>(shape.cells()), 0) {
  const BigInt count = syt_count(shape);
  if (count > cap) {
    throw InfeasibleError("enumeration of " + shape.to_string() + " refused: " +
                          count.str() + " tableaux exceeds cap " + std::to_string(cap));
  }
  count_ = count.convert_to<std::uint64_t>();
  choice_.reserve(static_cast<std::size_t>(shape.cells()));
}

bool SytEnumeration::can_place(int row) const {
  return row_len_[row] < shape_.cols() && (row == 0 || row_len_[row - 1] > row_len_[row]);
}

void SytEnumeration::place(int row) {
  const int value = static_cast<int>(choice_.size()) + 1;
  entries_[static_cast<std::size_t>(row * shape_.cols() + row_len_[row])] = value;
  ++row_len_[row];
  choice_.push_back(row);
}

void SytEnumeration::unplace() {
  const int row = choice_.back();
  choice_.pop_back();
  --row_len_[row];
}

void SytEnumeration::descend() {
  while (static_cast<int>(choice_.size()) < shape_.cells()) {
    int row = 0;
    while (!can_place(row)) ++row;
    place(row);
  }
}

std::optional<DiscreteTableau> SytEnumeration::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    descend();
    return DiscreteTableau(shape_, entries_);
  }
  while (!choice_.empty()) {
    const int previous = choice_.back();
    unplace();
    for (int row = previous + 1; row < shape_.rows(); ++row) {
      if (can_place(row)) {
        place(row);
        descend();
        return DiscreteTableau(shape_, entries_);
      }
    }
  }
  done_ = true;
  return std::nullopt;
}

std::vector<DiscreteTableau> enumerate_syt(const Shape& shape, std::uint64_t cap) {
  SytEnumeration stream(shape, cap);
  std::vector<DiscreteTableau> out;
  out.reserve(stream.count());
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

}  // namespace ytab
