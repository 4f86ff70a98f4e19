#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "core/trade.hpp"

namespace latin {

/// Largest order the full-enumeration oracles accept.
inline constexpr int kMaxExhaustiveOrder = 5;
/// Largest order the branch-and-bound trade oracle accepts.
inline constexpr int kMaxBnbOrder = 8;

/// Visits every Latin square of order n exactly once, in lexicographic
/// row-major order. The visitor returns false to stop early.
/// Counts: 1, 2, 12, 576, 161280 for n = 1..5.
void enumerate_squares(int n, const std::function<bool(const LatinSquare&)>& visit);

long long count_squares(int n);

/// True minimum distance from l to any other Latin square of its order, with
/// a witness trade. Exhaustive; order <= 5.
std::pair<int, LatinTrade> min_trade_exhaustive(const LatinSquare& l);

/// True minimum trade in l of size <= size_cap, found by growing a mate
/// assignment cell by cell under row/column balance deficits; nullopt when
/// no trade within the cap exists. Order <= 8.
std::optional<std::pair<int, LatinTrade>> min_trade_bnb(const LatinSquare& l, int size_cap);

/// Number of Latin squares of order d.order() containing d, counted by
/// backtracking over the most constrained cell first; stops at cap.
/// Completions are handed to `sink` (if given) as they are found.
long long count_completions(const PartialLatinSquare& d, long long cap,
                            const std::function<void(const LatinSquare&)>& sink = nullptr);

struct DefiningSetReport {
  PartialLatinSquare candidate;
  long long completions = 0;  // capped at 2
  bool is_defining = false;
  std::optional<LatinSquare> witness;  // a second completion when not defining
};

/// Checks whether d (a subset of l) has l as its unique completion. When it
/// does not, the report carries a second completion; the difference between
/// l and that witness is a trade avoiding d entirely.
DefiningSetReport is_defining_set(const LatinSquare& l, const PartialLatinSquare& d);

/// Smallest defining set inside l, searched by increasing size with
/// trade-hitting pruning (every defining set meets every trade of l).
/// Order <= 5.
std::pair<int, PartialLatinSquare> smallest_defining_set(const LatinSquare& l);

}  // namespace latin
