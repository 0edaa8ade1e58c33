#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ytab/combinatorics.hpp"
#include "ytab/tableau.hpp"

namespace ytab {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100000;

/// Lazy stream over every standard Young tableau of a rectangle, in
/// lexicographic order of the row chosen for 1, 2, ..., mn.
///
/// Construction refuses (InfeasibleError) when the hook-length count exceeds
/// the cap; the message carries both numbers.
class SytEnumeration {
 public:
  explicit SytEnumeration(Shape shape, std::uint64_t cap = kDefaultEnumerationCap);

  /// Hook-length count; the stream yields exactly this many tableaux.
  std::uint64_t count() const { return count_; }

  std::optional<DiscreteTableau> next();

 private:
  bool can_place(int row) const;
  void place(int row);
  void unplace();
  void descend();

  Shape shape_;
  std::uint64_t count_;
  std::vector<int> row_len_;
  std::vector<int> entries_;
  std::vector<int> choice_;  // row chosen for value i+1
  bool started_ = false;
  bool done_ = false;
};

/// All tableaux of a small shape at once.
std::vector<DiscreteTableau> enumerate_syt(const Shape& shape,
                                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace ytab
