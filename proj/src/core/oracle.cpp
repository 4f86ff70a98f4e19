#include "core/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace latin {

namespace {

void check_enumerable(int n) {
  if (n < 1) raise(Errc::invalid_argument, "order must be >= 1");
  if (n > kMaxExhaustiveOrder)
    raise(Errc::order_too_large,
          "exhaustive oracle is capped at order " + std::to_string(kMaxExhaustiveOrder));
}

}  // namespace

void enumerate_squares(int n, const std::function<bool(const LatinSquare&)>& visit) {
  check_enumerable(n);
  std::vector<int> cells(static_cast<size_t>(n) * n, -1);
  std::vector<uint32_t> row_used(n, 0), col_used(n, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int idx) {
    if (stop) return;
    if (idx == n * n) {
      stop = !visit(LatinSquare::from_cells(n, cells));
      return;
    }
    const int r = idx / n, c = idx % n;
    const uint32_t used = row_used[r] | col_used[c];
    for (int s = 0; s < n && !stop; ++s) {
      if (used >> s & 1u) continue;
      cells[idx] = s;
      row_used[r] |= 1u << s;
      col_used[c] |= 1u << s;
      rec(idx + 1);
      row_used[r] &= ~(1u << s);
      col_used[c] &= ~(1u << s);
    }
  };
  rec(0);
}

long long count_squares(int n) {
  long long count = 0;
  enumerate_squares(n, [&](const LatinSquare&) {
    ++count;
    return true;
  });
  return count;
}

std::pair<int, LatinTrade> min_trade_exhaustive(const LatinSquare& l) {
  const int n = l.order();
  check_enumerable(n);
  if (n < 2) raise(Errc::order_too_small, "no trade exists for n < 2");

  // Row cycle fallback seeds the upper bound; enumeration only needs to
  // find strict improvements.
  LatinTrade seed = min_row_cycle_trade(l);
  int best = seed.size();
  std::vector<int> best_cells;

  std::vector<int> cells(static_cast<size_t>(n) * n, -1);
  std::vector<uint32_t> row_used(n, 0), col_used(n, 0);
  std::function<void(int, int)> rec = [&](int idx, int diff) {
    if (diff >= best) return;
    if (idx == n * n) {
      if (diff > 0) {
        best = diff;
        best_cells = cells;
      }
      return;
    }
    const int r = idx / n, c = idx % n;
    const uint32_t used = row_used[r] | col_used[c];
    for (int s = 0; s < n; ++s) {
      if (used >> s & 1u) continue;
      cells[idx] = s;
      row_used[r] |= 1u << s;
      col_used[c] |= 1u << s;
      rec(idx + 1, diff + (s != l.at(r, c)));
      row_used[r] &= ~(1u << s);
      col_used[c] &= ~(1u << s);
    }
  };
  rec(0, 0);

  if (best_cells.empty()) return {best, seed};
  return {best, as_trade(l, LatinSquare::from_cells(n, std::move(best_cells)))};
}

namespace {

// Grows a mate assignment cell by cell in row-major order. Signed counts per
// (row, symbol) and (column, symbol) track balance: +1 for a chosen cell's
// own symbol, -1 for its mate. A zero state over exactly `target` cells is a
// trade.
struct TradeSearch {
  const LatinSquare& l;
  int n;
  int target = 0;
  std::vector<int> cnt_row, cnt_col;
  std::vector<int> owed_row, owed_col;
  int sum_owed_row = 0, sum_owed_col = 0;
  std::vector<Triple> picked, picked_mate;
  std::optional<LatinTrade> found;

  explicit TradeSearch(const LatinSquare& sq) : l(sq), n(sq.order()) {
    cnt_row.assign(static_cast<size_t>(n) * n, 0);
    cnt_col.assign(static_cast<size_t>(n) * n, 0);
    owed_row.assign(n, 0);
    owed_col.assign(n, 0);
  }

  void bump(std::vector<int>& cnt, std::vector<int>& owed, int& sum, int line, int sym,
            int delta) {
    int& x = cnt[line * n + sym];
    const int before = std::max(0, x);
    x += delta;
    const int d = std::max(0, x) - before;
    owed[line] += d;
    sum += d;
  }

  void apply(int r, int c, int s, int t, int delta) {
    bump(cnt_row, owed_row, sum_owed_row, r, s, delta);
    bump(cnt_row, owed_row, sum_owed_row, r, t, -delta);
    bump(cnt_col, owed_col, sum_owed_col, c, s, delta);
    bump(cnt_col, owed_col, sum_owed_col, c, t, -delta);
  }

  bool dfs(int idx) {
    const int chosen = static_cast<int>(picked.size());
    const int remaining = target - chosen;
    if (sum_owed_row > remaining || sum_owed_col > remaining) return false;
    if (chosen == target) {
      if (sum_owed_row != 0 || sum_owed_col != 0) return false;
      found = LatinTrade::make(PartialLatinSquare::from_triples(n, picked),
                               PartialLatinSquare::from_triples(n, picked_mate));
      return true;
    }
    if (idx == n * n) return false;
    if (remaining > n * n - idx) return false;
    const int r = idx / n, c = idx % n;
    if (c == 0 && idx > 0) {
      if (owed_row[r - 1] != 0) return false;  // finished rows must balance
      for (int x = 0; x < n; ++x)
        if (owed_col[x] > n - r) return false;  // columns only have rows r.. left
    }
    if (owed_row[r] > n - c) return false;

    const int s = l.at(r, c);
    for (int t = 0; t < n; ++t) {
      if (t == s) continue;
      // The mate symbol must be sourced from this row and this column: its
      // unique source cell is either already picked or still ahead.
      const int crt = cnt_row[r * n + t];
      if (crt < 0 || (crt == 0 && l.column_of(r, t) <= c)) continue;
      const int cct = cnt_col[c * n + t];
      if (cct < 0 || (cct == 0 && l.row_of(c, t) <= r)) continue;
      apply(r, c, s, t, +1);
      picked.push_back({r, c, s});
      picked_mate.push_back({r, c, t});
      if (dfs(idx + 1)) return true;
      picked.pop_back();
      picked_mate.pop_back();
      apply(r, c, s, t, -1);
    }
    return dfs(idx + 1);
  }
};

}  // namespace

std::optional<std::pair<int, LatinTrade>> min_trade_bnb(const LatinSquare& l, int size_cap) {
  const int n = l.order();
  if (n < 2) raise(Errc::order_too_small, "no trade exists for n < 2");
  if (n > kMaxBnbOrder)
    raise(Errc::order_too_large,
          "branch-and-bound oracle is capped at order " + std::to_string(kMaxBnbOrder));
  const int cap = std::min(size_cap, 2 * n);
  TradeSearch search(l);
  for (int target = 4; target <= cap; ++target) {
    search.target = target;
    if (search.dfs(0)) return std::pair{target, *search.found};
  }
  return std::nullopt;
}

long long count_completions(const PartialLatinSquare& d, long long cap,
                            const std::function<void(const LatinSquare&)>& sink) {
  const int n = d.order();
  if (n < 1) raise(Errc::invalid_argument, "order must be >= 1");
  if (n > 30) raise(Errc::order_too_large, "completion counting is capped at order 30");
  if (cap < 1) raise(Errc::invalid_argument, "cap must be >= 1");

  std::vector<int> cells(static_cast<size_t>(n) * n, -1);
  std::vector<uint32_t> row_used(n, 0), col_used(n, 0);
  for (const Triple& t : d.triples()) {
    cells[t.row * n + t.col] = t.sym;
    row_used[t.row] |= 1u << t.sym;
    col_used[t.col] |= 1u << t.sym;
  }
  std::vector<int> empties;
  for (int i = 0; i < n * n; ++i)
    if (cells[i] < 0) empties.push_back(i);

  const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  long long count = 0;
  std::function<bool()> rec = [&]() -> bool {
    // Most constrained empty cell first.
    int pick = -1, pick_cands = n + 1;
    for (int idx : empties) {
      if (cells[idx] >= 0) continue;
      const int r = idx / n, c = idx % n;
      const int cands = std::popcount(full & ~(row_used[r] | col_used[c]));
      if (cands < pick_cands) {
        pick_cands = cands;
        pick = idx;
        if (cands <= 1) break;
      }
    }
    if (pick < 0) {
      ++count;
      if (sink) sink(LatinSquare::from_cells(n, cells));
      return count >= cap;
    }
    if (pick_cands == 0) return false;
    const int r = pick / n, c = pick % n;
    uint32_t cands = full & ~(row_used[r] | col_used[c]);
    while (cands) {
      const int s = std::countr_zero(cands);
      cands &= cands - 1;
      cells[pick] = s;
      row_used[r] |= 1u << s;
      col_used[c] |= 1u << s;
      const bool stop = rec();
      cells[pick] = -1;
      row_used[r] &= ~(1u << s);
      col_used[c] &= ~(1u << s);
      if (stop) return true;
    }
    return false;
  };
  rec();
  return count;
}

DefiningSetReport is_defining_set(const LatinSquare& l, const PartialLatinSquare& d) {
  if (d.order() != l.order()) raise(Errc::order_mismatch, "orders differ");
  if (!l.contains(d)) raise(Errc::not_contained, "candidate is not contained in the square");

  DefiningSetReport rep;
  rep.candidate = d;
  std::vector<LatinSquare> completions;
  rep.completions =
      count_completions(d, 2, [&](const LatinSquare& s) { completions.push_back(s); });
  ensure(rep.completions >= 1, "a subset of a Latin square always completes");
  if (rep.completions == 1) {
    ensure(completions.front() == l, "a unique completion equals the reference square");
    rep.is_defining = true;
    return rep;
  }
  for (const LatinSquare& s : completions)
    if (!(s == l)) {
      rep.witness = s;
      break;
    }
  ensure(rep.witness.has_value(), "one of two completions differs from the reference");
  // The cells where the witness differs form a trade avoiding the candidate.
  ensure(!difference(l, *rep.witness).intersects(d), "witness trade avoids the candidate");
  return rep;
}

std::pair<int, PartialLatinSquare> smallest_defining_set(const LatinSquare& l) {
  const int n = l.order();
  check_enumerable(n);
  const int cells = n * n;
  std::vector<uint32_t> trade_masks;  // every defining set must hit each of these

  std::vector<Triple> all;
  all.reserve(cells);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) all.push_back({r, c, l.at(r, c)});

  for (int k = 0; k <= cells; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      uint32_t mask = 0;
      for (int i : comb) mask |= 1u << i;
      bool hits_all = true;
      for (uint32_t t : trade_masks)
        if ((mask & t) == 0) {
          hits_all = false;
          break;
        }
      if (hits_all) {
        std::vector<Triple> chosen;
        chosen.reserve(k);
        for (int i : comb) chosen.push_back(all[i]);
        auto d = PartialLatinSquare::from_triples(n, std::move(chosen));
        auto rep = is_defining_set(l, d);
        if (rep.is_defining) return {k, d};
        if (trade_masks.size() < 200) {
          const auto witness_trade = difference(l, *rep.witness);
          uint32_t t = 0;
          for (const Triple& x : witness_trade.triples())
            t |= 1u << (x.row * n + x.col);
          if (std::find(trade_masks.begin(), trade_masks.end(), t) == trade_masks.end())
            trade_masks.push_back(t);
        }
      }
      // next k-combination of {0..cells-1}
      int i = k - 1;
      while (i >= 0 && comb[i] == cells - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  ensure(false, "the full square is always a defining set");
  raise(Errc::internal, "unreachable");
}

}  // namespace latin
