#include "core/square.hpp"

#include <algorithm>
#include <string>

namespace latin {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::parse_error: return "parse_error";
    case Errc::symbol_out_of_range: return "symbol_out_of_range";
    case Errc::duplicate_in_row: return "duplicate_in_row";
    case Errc::duplicate_in_column: return "duplicate_in_column";
    case Errc::order_mismatch: return "order_mismatch";
    case Errc::identical_squares: return "identical_squares";
    case Errc::trade_not_contained: return "trade_not_contained";
    case Errc::same_row: return "same_row";
    case Errc::order_too_small: return "order_too_small";
    case Errc::order_too_large: return "order_too_large";
    case Errc::not_contained: return "not_contained";
    case Errc::not_a_cycle: return "not_a_cycle";
    case Errc::bad_symbols: return "bad_symbols";
    case Errc::path_too_short: return "path_too_short";
    case Errc::malformed_associated_square: return "malformed_associated_square";
    case Errc::verification_failed: return "verification_failed";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

PartialLatinSquare::PartialLatinSquare(int order) : n_(order) {
  if (order < 1) raise(Errc::invalid_argument, "order must be >= 1");
}

PartialLatinSquare PartialLatinSquare::from_triples(int order, std::vector<Triple> triples) {
  PartialLatinSquare p(order);
  std::sort(triples.begin(), triples.end());
  for (size_t i = 0; i < triples.size(); ++i) {
    const Triple& t = triples[i];
    if (t.row < 0 || t.row >= order || t.col < 0 || t.col >= order)
      raise(Errc::invalid_argument, "cell index out of range");
    if (t.sym < 0 || t.sym >= order)
      raise(Errc::symbol_out_of_range,
            "symbol " + std::to_string(t.sym) + " out of range for order " + std::to_string(order));
    if (i > 0 && triples[i - 1].row == t.row && triples[i - 1].col == t.col)
      raise(Errc::invalid_argument, "duplicate cell (" + std::to_string(t.row) + "," +
                                        std::to_string(t.col) + ")");
  }
  // Latin constraints on the filled cells.
  std::vector<char> row_seen(static_cast<size_t>(order) * order, 0);
  std::vector<char> col_seen(static_cast<size_t>(order) * order, 0);
  for (const Triple& t : triples) {
    char& r = row_seen[static_cast<size_t>(t.row) * order + t.sym];
    if (r) raise(Errc::duplicate_in_row, "symbol " + std::to_string(t.sym) +
                                             " twice in row " + std::to_string(t.row));
    r = 1;
    char& c = col_seen[static_cast<size_t>(t.col) * order + t.sym];
    if (c) raise(Errc::duplicate_in_column, "symbol " + std::to_string(t.sym) +
                                                " twice in column " + std::to_string(t.col));
    c = 1;
  }
  p.triples_ = std::move(triples);
  return p;
}

std::optional<int> PartialLatinSquare::at(int row, int col) const {
  Triple probe{row, col, 0};
  auto it = std::lower_bound(triples_.begin(), triples_.end(), probe,
                             [](const Triple& a, const Triple& b) {
                               return std::pair(a.row, a.col) < std::pair(b.row, b.col);
                             });
  if (it != triples_.end() && it->row == row && it->col == col) return it->sym;
  return std::nullopt;
}

bool PartialLatinSquare::contains(const Triple& t) const {
  auto s = at(t.row, t.col);
  return s.has_value() && *s == t.sym;
}

bool PartialLatinSquare::intersects(const PartialLatinSquare& other) const {
  const auto& a = triples_;
  const auto& b = other.triples_;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

PartialLatinSquare PartialLatinSquare::merged_with(const PartialLatinSquare& other) const {
  if (n_ != other.n_) raise(Errc::order_mismatch, "orders differ");
  std::vector<Triple> merged;
  merged.reserve(triples_.size() + other.triples_.size());
  std::merge(triples_.begin(), triples_.end(), other.triples_.begin(), other.triples_.end(),
             std::back_inserter(merged));
  std::vector<Triple> out;
  out.reserve(merged.size());
  for (const Triple& t : merged) {
    if (!out.empty() && out.back().row == t.row && out.back().col == t.col) {
      if (out.back().sym != t.sym)
        raise(Errc::malformed_associated_square, "conflicting symbols in one cell");
      continue;
    }
    out.push_back(t);
  }
  return from_triples(n_, std::move(out));
}

LatinSquare::LatinSquare(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {
  build_inverses();
}

void LatinSquare::build_inverses() {
  col_of_.assign(static_cast<size_t>(n_) * n_, -1);
  row_of_.assign(static_cast<size_t>(n_) * n_, -1);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      int s = cells_[r * n_ + c];
      col_of_[r * n_ + s] = c;
      row_of_[c * n_ + s] = r;
    }
}

LatinSquare LatinSquare::from_cells(int order, std::vector<int> cells) {
  if (order < 1) raise(Errc::invalid_argument, "order must be >= 1");
  if (cells.size() != static_cast<size_t>(order) * order)
    raise(Errc::invalid_argument, "cell count does not match order");
  std::vector<char> row_seen(static_cast<size_t>(order) * order, 0);
  std::vector<char> col_seen(static_cast<size_t>(order) * order, 0);
  for (int r = 0; r < order; ++r)
    for (int c = 0; c < order; ++c) {
      int s = cells[r * order + c];
      if (s < 0 || s >= order)
        raise(Errc::symbol_out_of_range, "symbol " + std::to_string(s) + " out of range at (" +
                                             std::to_string(r) + "," + std::to_string(c) + ")");
      char& rs = row_seen[static_cast<size_t>(r) * order + s];
      if (rs) raise(Errc::duplicate_in_row, "symbol " + std::to_string(s) + " repeats in row " +
                                                std::to_string(r));
      rs = 1;
      char& cs = col_seen[static_cast<size_t>(c) * order + s];
      if (cs) raise(Errc::duplicate_in_column, "symbol " + std::to_string(s) +
                                                   " repeats in column " + std::to_string(c));
      cs = 1;
    }
  return LatinSquare(order, std::move(cells));
}

LatinSquare validate_square(const std::vector<std::vector<int>>& grid) {
  int n = static_cast<int>(grid.size());
  if (n < 1) raise(Errc::invalid_argument, "empty grid");
  std::vector<int> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : grid) {
    if (static_cast<int>(row.size()) != n) raise(Errc::invalid_argument, "grid is not square");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return LatinSquare::from_cells(n, std::move(cells));
}

PartialLatinSquare LatinSquare::as_partial() const {
  std::vector<Triple> t;
  t.reserve(cells_.size());
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) t.push_back({r, c, at(r, c)});
  return PartialLatinSquare::from_triples(n_, std::move(t));
}

bool LatinSquare::contains(const PartialLatinSquare& p) const {
  if (p.order() != n_) return false;
  for (const Triple& t : p.triples())
    if (at(t.row, t.col) != t.sym) return false;
  return true;
}

int hamming_distance(const LatinSquare& l, const LatinSquare& m) {
  if (l.order() != m.order()) raise(Errc::order_mismatch, "orders differ");
  int d = 0;
  const auto& a = l.cells();
  const auto& b = m.cells();
  for (size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

PartialLatinSquare difference(const LatinSquare& l, const LatinSquare& m) {
  if (l.order() != m.order()) raise(Errc::order_mismatch, "orders differ");
  std::vector<Triple> t;
  const int n = l.order();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (l.at(r, c) != m.at(r, c)) t.push_back({r, c, l.at(r, c)});
  return PartialLatinSquare::from_triples(n, std::move(t));
}

}  // namespace latin
