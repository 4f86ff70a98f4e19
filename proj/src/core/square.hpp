#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "core/errors.hpp"

namespace latin {

/// One filled cell of a (partial) Latin square: symbol `sym` at (row, col).
struct Triple {
  int row = 0;
  int col = 0;
  int sym = 0;

  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

/// A set of filled cells over symbols 0..n-1 where each symbol occurs at most
/// once per row and at most once per column, and each cell is filled at most
/// once. Triples are kept sorted by (row, col), so equality is structural.
class PartialLatinSquare {
 public:
  PartialLatinSquare() = default;
  explicit PartialLatinSquare(int order);

  /// Sorts, checks the Latin constraints, and rejects duplicate cells.
  static PartialLatinSquare from_triples(int order, std::vector<Triple> triples);

  int order() const { return n_; }
  int size() const { return static_cast<int>(triples_.size()); }
  bool empty() const { return triples_.empty(); }
  const std::vector<Triple>& triples() const { return triples_; }

  std::optional<int> at(int row, int col) const;
  bool contains(const Triple& t) const;
  bool cell_occupied(int row, int col) const { return at(row, col).has_value(); }

  /// True when the two sets share a triple.
  bool intersects(const PartialLatinSquare& other) const;

  /// Union of the two triple sets. Identical triples merge; two different
  /// symbols in one cell throw malformed_associated_square.
  PartialLatinSquare merged_with(const PartialLatinSquare& other) const;

  friend bool operator==(const PartialLatinSquare&, const PartialLatinSquare&) = default;

 private:
  int n_ = 0;
  std::vector<Triple> triples_;
};

/// Fully filled Latin square of order n over symbols 0..n-1. Immutable.
class LatinSquare {
 public:
  /// Validates an n*n row-major grid.
  static LatinSquare from_cells(int order, std::vector<int> cells);

  int order() const { return n_; }
  int at(int row, int col) const { return cells_[row * n_ + col]; }
  const std::vector<int>& cells() const { return cells_; }

  /// Column holding `sym` in `row` (total inverse of the row).
  int column_of(int row, int sym) const { return col_of_[row * n_ + sym]; }
  /// Row holding `sym` in `col`.
  int row_of(int col, int sym) const { return row_of_[col * n_ + sym]; }

  PartialLatinSquare as_partial() const;
  bool contains(const PartialLatinSquare& p) const;

  friend bool operator==(const LatinSquare& a, const LatinSquare& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  LatinSquare(int n, std::vector<int> cells);
  void build_inverses();

  int n_ = 0;
  std::vector<int> cells_;
  std::vector<int> col_of_;
  std::vector<int> row_of_;
};

/// Validates a rectangular grid as a Latin square.
LatinSquare validate_square(const std::vector<std::vector<int>>& grid);

/// Number of cells where the two squares differ. Symmetric.
int hamming_distance(const LatinSquare& l, const LatinSquare& m);

/// Triples of `l` on the cells where `l` and `m` disagree.
PartialLatinSquare difference(const LatinSquare& l, const LatinSquare& m);

}  // namespace latin
