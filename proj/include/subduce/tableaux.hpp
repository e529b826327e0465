#pragma once

// Partitions, standard Young tableaux and the action of the adjacent
// transpositions g_i on them.
//
// Tableaux are totally ordered by the lexicographic order of their row-major
// reading word; "index" below always means the 0-based position in that order.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subduce {

class Partition {
 public:
  Partition() = default;
  /// Throws InputError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// Parses "4,3,2,1".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int operator[](std::size_t row) const { return parts_[row]; }
  bool empty() const { return parts_.empty(); }

  /// Length of `row`, 0 past the last row.
  int row_length(int row) const;
  /// Diagram inclusion.
  bool contains(const Partition& other) const;
  Partition conjugate() const;

  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// All partitions of n, in decreasing lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);

/// Number of standard tableaux of the shape (hook length formula).
std::uint64_t dimension(const Partition& shape);

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

class StandardTableau {
 public:
  StandardTableau() = default;

  /// Rows of entries; throws InputError unless they form a standard filling
  /// of a contiguous range of integers.
  static StandardTableau from_rows(const std::vector<std::vector<int>>& rows);
  /// Parses "1 2/3".
  static StandardTableau parse(std::string_view text);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  int first_entry() const { return start_; }
  int last_entry() const { return start_ + size() - 1; }
  bool contains(int value) const { return value >= start_ && value <= last_entry(); }

  /// Row-major reading word.
  const std::vector<int>& word() const { return word_; }
  Cell position(int value) const;
  int entry(int row, int col) const;
  /// col - row of the box holding `value`.
  int content(int value) const;

  std::vector<std::vector<int>> rows() const;
  std::string to_string() const;

  /// Same shape, entries shifted so the smallest is `start`.
  StandardTableau relabeled(int start) const;

  bool operator==(const StandardTableau& other) const { return word_ == other.word_; }
  std::strong_ordering operator<=>(const StandardTableau& other) const {
    return word_ <=> other.word_;
  }

 private:
  StandardTableau(Partition shape, int start, std::vector<int> word);

  Partition shape_;
  int start_ = 1;
  std::vector<int> word_;
  std::vector<Cell> cells_;  // indexed by value - start_
};

/// Signed axial distance content(i+1) - content(i). Never 0; +1 exactly when
/// i, i+1 sit next to each other in a row, -1 when they share a column.
/// Throws RangeError if i or i+1 is not an entry.
int axial_distance(const StandardTableau& m, int i);

/// Swaps i and i+1 when the result is standard, otherwise returns m.
StandardTableau apply_generator(const StandardTableau& m, int i);

/// Every standard filling of `shape` by start..start+n-1, in lexicographic
/// order of the reading word.
std::vector<StandardTableau> enumerate_standard_tableaux(const Partition& shape, int start = 1);

/// A pair (m1, m2): m1 filled by 1..k1, m2 by k1+1..k1+k2.
struct TableauPair {
  StandardTableau first;
  StandardTableau second;

  TableauPair() = default;
  /// Throws InputError when the filling ranges are not contiguous.
  TableauPair(StandardTableau first, StandardTableau second);

  int split() const { return first.size(); }
  int size() const { return first.size() + second.size(); }

  bool operator==(const TableauPair&) const = default;
};

/// d_i(m1) for i < k1, d_i(m2) for i > k1; UndefinedActionError at i = k1.
int axial_distance(const TableauPair& p, int i);
TableauPair apply_generator(const TableauPair& p, int i);

/// Enumeration of one shape with precomputed generator tables, so repeated
/// g_i lookups are O(1).
class TableauIndex {
 public:
  TableauIndex() = default;
  TableauIndex(Partition shape, int start);

  const Partition& shape() const { return shape_; }
  int first_entry() const { return start_; }
  int last_entry() const { return start_ + shape_.size() - 1; }
  std::size_t size() const { return tableaux_.size(); }
  const StandardTableau& operator[](std::size_t index) const { return tableaux_[index]; }
  const std::vector<StandardTableau>& tableaux() const { return tableaux_; }

  /// Throws InputError when the tableau is not in this enumeration.
  std::size_t index_of(const StandardTableau& t) const;

  /// True when g_i acts on this alphabet (i and i+1 are both entries).
  bool acts(int i) const { return i >= start_ && i < last_entry(); }
  /// Index of g_i(tableau `index`).
  std::size_t move(std::size_t index, int i) const;
  /// d_i of tableau `index`.
  int distance(std::size_t index, int i) const;

 private:
  std::size_t slot(int i) const;

  Partition shape_;
  int start_ = 1;
  std::vector<StandardTableau> tableaux_;
  std::map<std::vector<int>, std::size_t> lookup_;
  std::vector<std::vector<std::size_t>> moves_;  // [i - start][index]
  std::vector<std::vector<int>> distances_;      // [i - start][index]
};

}  // namespace subduce
