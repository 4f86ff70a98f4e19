#pragma once

#include <optional>
#include <vector>

#include "core/digraph.hpp"

namespace latin {

enum class FinderStrategy { proof, greedy, exhaustive_pairs };

/// Tuning of the small-trade search. The default constants satisfy
/// b = k + d - 1/2, the relation the certified search path relies on.
struct FinderConfig {
  double b_const = 4.0;
  double k_const = 4.0 / 3.0;
  double d_const = 19.0 / 6.0;
  int f_override = 0;  // 0: derive f from d_const
  FinderStrategy strategy = FinderStrategy::greedy;

  /// Zig-zag cutoff f(n) = ceil(d*sqrt(n)) + 1 unless overridden.
  int f_for(int n) const;
};

/// ceil(x) robust to representation error on exact values.
int ceil_int(double x);

/// min(2n, ceil(8*sqrt(n))): the guaranteed trade size target.
int trade_size_target(int n);

/// 2g + 2*bk*f + 2*y*(f+1): trade size bound for a cycle's colour counts.
long long size_bound(long long g, long long bk, long long y, long long f);

/// Green edges of one digraph cut into directed paths, each a run of
/// consecutive vertices of a green cycle.
struct GreenPathPartition {
  std::vector<std::vector<int>> paths;  // vertex sequences
  int max_len = 0;                      // vertex-count ceiling per path
};

/// Cuts every green cycle (or chain, when edges were filtered) into paths of
/// at most max_len vertices, starting each cycle at its smallest vertex.
/// Every green cycle contributes at most one path shorter than max_len.
GreenPathPartition partition_green(const ColouredDigraph& g, int max_len);

/// A black edge between two embedded paths, reduced to path positions.
/// `tag` is an opaque caller payload (e.g. the digraph edge id).
struct CrossingSegment {
  int pos_p = 0;
  int pos_q = 0;
  bool from_p = true;  // direction: P-vertex -> Q-vertex
  int tag = -1;
};

/// The directed cycle found between two paths: two crossing segments plus
/// green runs. A segment directed against traversal is used as its blue
/// composition, entering one vertex later and leaving one earlier.
struct CrossingCycle {
  CrossingSegment low;   // the segment with the smaller P position
  CrossingSegment high;  // the other one
  bool low_as_black = false;
  bool high_as_black = false;
  int p_from = 0, p_to = 0;  // green run along P (positions, inclusive)
  int q_from = 0, q_to = 0;  // green run along Q
  int non_green_edges = 2;
  int length = 0;
};

/// Looks for two segments that cross without touching adjacent vertices:
/// opposite order on the two paths and offset >= 2 on both. Guaranteed to
/// exist once more than 2(p+q-2) segments are present. Among crossing pairs,
/// minimizes the resulting cycle length (ties by position order).
/// Requires p, q >= 3.
std::optional<CrossingCycle> find_crossing_cycle(int p, int q,
                                                 const std::vector<CrossingSegment>& segments);

/// A small trade contained in l, of size at most min(2n, ceil(8*sqrt(n))).
/// Strategy "proof": green-path partition + crossing search + shortest-cycle
/// extraction; "greedy": shortest cycles over the best symbol pairs;
/// "exhaustive-pairs": every ordered pair. All fall back to the minimum row
/// cycle trade. Deterministic for fixed config and input.
LatinTrade find_small_trade(const LatinSquare& l, const FinderConfig& cfg = {});

/// Shortest-cycle trade of the single digraph G_{l,a,b,f}; nullopt when that
/// digraph is acyclic.
std::optional<LatinTrade> pair_trade(const LatinSquare& l, int a, int b, int f);

/// assemble_trade plus the feedback loop: a row-pair rescue is returned as
/// the trade, a shorter-cycle report is followed (the witness green edge
/// replaces part of the cycle) and assembly retries on the strictly shorter
/// cycle. nullopt only if following a report makes no progress.
std::optional<LatinTrade> assemble_following_reports(const LatinSquare& l,
                                                     const ColouredDigraph& g, DirectedCycle c);

}  // namespace latin
