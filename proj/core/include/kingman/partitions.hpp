#pragma once

#include "kingman/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kingman {

/// A Young diagram: weakly decreasing positive parts. The empty partition is
/// the empty diagram.
///
/// Ordering is lexicographic on the part sequence, so the canonical level
/// enumeration (reverse-lexicographic) is simply descending order.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless `parts` is positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "[3,1,1]"; "[]" is the empty diagram.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Number of rows of length k.
  int multiplicity(int k) const noexcept;
  /// Distinct row lengths, descending.
  std::vector<int> distinct_parts() const;
  /// prod_k multiplicity(k)!, the factor relating the bold and plain monomials.
  BigInt multiplicity_factorial() const;

  /// True when every box of `*this` lies in `other`.
  bool contained_in(const Partition& other) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Marks `add_box` calls that open a new one-box row.
inline constexpr int kNewRow = 0;

/// Box with column index row_value + 1 added to the first row equal to
/// `row_value`, or a new one-box row for kNewRow.
/// Throws std::invalid_argument when no row has that length.
Partition add_box(const Partition& lambda, int row_value);

/// Box removed from the last row equal to `row_value` (the row is dropped
/// when it empties). Throws std::invalid_argument when no row has that length.
Partition remove_box(const Partition& lambda, int row_value);

/// If mu is obtained from lambda by removing one box, the length of the row it
/// was removed from (i.e. the column of the box lambda/mu).
std::optional<int> removed_row_value(const Partition& lambda, const Partition& mu);

/// Edge multiplicity kappa(lambda, mu): multiplicity in lambda of the column of
/// the box lambda/mu, or 0 when mu is not obtained from lambda by removing a box.
int edge_multiplicity(const Partition& lambda, const Partition& mu);

/// Diagrams obtained by removing one box, paired with the edge multiplicity.
struct Neighbour {
  Partition diagram;
  int row_value;     // column of the box that differs
  int multiplicity;  // kappa on the edge
};
std::vector<Neighbour> lower_neighbours(const Partition& lambda);
/// Diagrams obtained by adding one box; `row_value` is the length of the row
/// that grew, or kNewRow.
std::vector<Neighbour> upper_neighbours(const Partition& lambda);

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ... (1^n).
std::vector<Partition> enumerate_level(int n);
/// Same order, restricted to at most `max_length` rows.
std::vector<Partition> enumerate_level(int n, int max_length);
/// Visits partitions of n in reverse-lexicographic order until `visit` returns false.
void for_each_partition(int n, const std::function<bool(const Partition&)>& visit);

/// Number of partitions of n by the pentagonal-number recurrence (exact).
BigInt partition_count(int n);

/// Number of oriented paths from mu to lambda in the graph of diagrams with
/// kappa-fold edges, by the recursion over lambda's lower neighbours. Memoized
/// per thread.
BigInt path_count(const Partition& mu, const Partition& lambda);

/// Closed form g(empty, lambda) = |lambda|! / prod lambda_i!.
BigInt dimension(const Partition& lambda);

BigInt factorial(int n);

/// Rising factorial (a)_k = a(a+1)...(a+k-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, int k);
/// Falling factorial a(a-1)...(a-k+1); a^{down 0} = 1.
Rational falling(const Rational& a, int k);
BigInt falling(long a, int k);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace kingman
