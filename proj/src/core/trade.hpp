#pragma once

#include <string>
#include <vector>

#include "core/square.hpp"

namespace latin {

/// A Latin trade T with its disjoint mate T': two partial Latin squares on
/// the same cells, cellwise disjoint, row balanced and column balanced.
/// Replacing T by T' inside a containing square yields another Latin square.
class LatinTrade {
 public:
  /// Validates every trade invariant; throws verification_failed otherwise.
  static LatinTrade make(PartialLatinSquare trade, PartialLatinSquare mate);

  const PartialLatinSquare& trade() const { return trade_; }
  const PartialLatinSquare& mate() const { return mate_; }
  int order() const { return trade_.order(); }
  int size() const { return trade_.size(); }

  /// The reverse trade (mate, trade); applying both is the identity.
  LatinTrade swapped() const { return make(mate_, trade_); }

  friend bool operator==(const LatinTrade&, const LatinTrade&) = default;

 private:
  LatinTrade(PartialLatinSquare t, PartialLatinSquare m)
      : trade_(std::move(t)), mate_(std::move(m)) {}

  PartialLatinSquare trade_;
  PartialLatinSquare mate_;
};

/// One named invariant check, for user-facing verification reports.
struct TradeCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Per-invariant verdicts for "is `t` a Latin trade contained in `l`?".
/// Does not throw on failure; callers inspect the verdicts.
std::vector<TradeCheck> trade_check_report(const LatinSquare& l, const PartialLatinSquare& trade,
                                           const PartialLatinSquare& mate);

/// difference(l, m) as a trade with mate difference(m, l).
LatinTrade as_trade(const LatinSquare& l, const LatinSquare& m);

/// Replaces t.trade by t.mate inside l. Requires t.trade to be contained in l.
LatinSquare apply_trade(const LatinSquare& l, const LatinTrade& t);

/// The row cycle trade through column c between rows r and r2: follow the
/// zig-zag sequence until the starting symbol recurs; the mate swaps the two
/// rows. Size 2K with 2 <= K <= n.
LatinTrade row_cycle(const LatinSquare& l, int r, int r2, int c);

/// Minimum-size row cycle trade over all ordered (r, r2, c). Size <= 2n.
LatinTrade min_row_cycle_trade(const LatinSquare& l);

/// All intercalates: 2x2 subarrays on two rows, two columns and two symbols,
/// each returned with the symbol-swapped mate. Ordered by (r1, r2, c1, c2).
std::vector<LatinTrade> intercalates(const LatinSquare& l);

}  // namespace latin
