#include "core/trade.hpp"

#include <algorithm>
#include <map>

namespace latin {

namespace {

// Multisets of symbols per row and per column of a triple set.
std::map<int, std::vector<int>> syms_by(const PartialLatinSquare& p, bool by_row) {
  std::map<int, std::vector<int>> out;
  for (const Triple& t : p.triples()) out[by_row ? t.row : t.col].push_back(t.sym);
  for (auto& [k, v] : out) std::sort(v.begin(), v.end());
  return out;
}

}  // namespace

std::vector<TradeCheck> trade_check_report(const LatinSquare& l, const PartialLatinSquare& trade,
                                           const PartialLatinSquare& mate) {
  std::vector<TradeCheck> checks;
  auto push = [&](std::string name, bool ok, std::string detail = "") {
    checks.push_back({std::move(name), ok, std::move(detail)});
  };

  push("nonempty", !trade.empty() && !mate.empty());
  push("order-match", trade.order() == l.order() && mate.order() == l.order());
  push("contained", trade.order() == l.order() && l.contains(trade));

  bool cells_match = trade.size() == mate.size();
  bool disjoint = true;
  if (cells_match) {
    const auto& a = trade.triples();
    const auto& b = mate.triples();
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].row != b[i].row || a[i].col != b[i].col) {
        cells_match = false;
        break;
      }
      if (a[i].sym == b[i].sym) disjoint = false;
    }
  }
  push("cells-match", cells_match);
  push("disjoint", cells_match && disjoint);
  push("row-balanced", cells_match && syms_by(trade, true) == syms_by(mate, true));
  push("column-balanced", cells_match && syms_by(trade, false) == syms_by(mate, false));
  return checks;
}

LatinTrade LatinTrade::make(PartialLatinSquare trade, PartialLatinSquare mate) {
  if (trade.order() != mate.order()) raise(Errc::order_mismatch, "trade and mate orders differ");
  if (trade.empty()) raise(Errc::verification_failed, "trade is empty");
  const auto& a = trade.triples();
  const auto& b = mate.triples();
  if (a.size() != b.size()) raise(Errc::verification_failed, "trade and mate cell counts differ");
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].row != b[i].row || a[i].col != b[i].col)
      raise(Errc::verification_failed, "trade and mate occupy different cells");
    if (a[i].sym == b[i].sym)
      raise(Errc::verification_failed, "trade and mate are not cellwise disjoint");
  }
  if (syms_by(trade, true) != syms_by(mate, true))
    raise(Errc::verification_failed, "trade and mate are not row balanced");
  if (syms_by(trade, false) != syms_by(mate, false))
    raise(Errc::verification_failed, "trade and mate are not column balanced");
  ensure(trade.size() >= 4, "a trade has at least four cells");
  return LatinTrade(std::move(trade), std::move(mate));
}

LatinTrade as_trade(const LatinSquare& l, const LatinSquare& m) {
  if (l.order() != m.order()) raise(Errc::order_mismatch, "orders differ");
  if (l == m) raise(Errc::identical_squares, "squares are identical");
  return LatinTrade::make(difference(l, m), difference(m, l));
}

LatinSquare apply_trade(const LatinSquare& l, const LatinTrade& t) {
  if (t.order() != l.order()) raise(Errc::order_mismatch, "orders differ");
  if (!l.contains(t.trade())) raise(Errc::trade_not_contained, "trade is not contained in square");
  std::vector<int> cells = l.cells();
  for (const Triple& x : t.mate().triples()) cells[x.row * l.order() + x.col] = x.sym;
  LatinSquare result = LatinSquare::from_cells(l.order(), std::move(cells));
  ensure(hamming_distance(l, result) == t.size(), "apply_trade changes exactly the trade cells");
  return result;
}

LatinTrade row_cycle(const LatinSquare& l, int r, int r2, int c) {
  const int n = l.order();
  if (r < 0 || r >= n || r2 < 0 || r2 >= n || c < 0 || c >= n)
    raise(Errc::invalid_argument, "row or column out of range");
  if (r == r2) raise(Errc::same_row, "row cycle needs two distinct rows");
  std::vector<Triple> t, m;
  int col = c;
  do {
    int top = l.at(r, col);
    int bottom = l.at(r2, col);
    t.push_back({r, col, top});
    t.push_back({r2, col, bottom});
    m.push_back({r2, col, top});
    m.push_back({r, col, bottom});
    col = l.column_of(r, bottom);
  } while (col != c);
  return LatinTrade::make(PartialLatinSquare::from_triples(n, std::move(t)),
                          PartialLatinSquare::from_triples(n, std::move(m)));
}

LatinTrade min_row_cycle_trade(const LatinSquare& l) {
  const int n = l.order();
  if (n < 2) raise(Errc::order_too_small, "no trade exists for n < 2");
  int best_len = n + 1, best_r = -1, best_r2 = -1, best_c = -1;
  std::vector<char> visited(n);
  for (int r = 0; r < n && best_len > 2; ++r)
    for (int r2 = 0; r2 < n && best_len > 2; ++r2) {
      if (r2 == r) continue;
      // Cycle decomposition of c -> column_of(r, l(r2, c)).
      std::fill(visited.begin(), visited.end(), 0);
      for (int c = 0; c < n; ++c) {
        if (visited[c]) continue;
        int len = 0, col = c;
        do {
          visited[col] = 1;
          ++len;
          col = l.column_of(r, l.at(r2, col));
        } while (col != c);
        if (len < best_len) {
          best_len = len;
          best_r = r;
          best_r2 = r2;
          best_c = c;
          if (best_len == 2) break;
        }
      }
    }
  return row_cycle(l, best_r, best_r2, best_c);
}

std::vector<LatinTrade> intercalates(const LatinSquare& l) {
  const int n = l.order();
  std::vector<LatinTrade> out;
  for (int r1 = 0; r1 < n; ++r1)
    for (int r2 = r1 + 1; r2 < n; ++r2)
      for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = c1 + 1; c2 < n; ++c2) {
          int x = l.at(r1, c1), y = l.at(r1, c2);
          if (l.at(r2, c1) != y || l.at(r2, c2) != x) continue;
          auto t = PartialLatinSquare::from_triples(
              n, {{r1, c1, x}, {r1, c2, y}, {r2, c1, y}, {r2, c2, x}});
          auto m = PartialLatinSquare::from_triples(
              n, {{r1, c1, y}, {r1, c2, x}, {r2, c1, x}, {r2, c2, y}});
          out.push_back(LatinTrade::make(std::move(t), std::move(m)));
        }
  return out;
}

}  // namespace latin
