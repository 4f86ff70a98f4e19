#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "core/trade.hpp"

namespace latin {

enum class EdgeColour { green, black, blue };

const char* colour_name(EdgeColour c);

/// Directed edge between column vertices, carrying the partial Latin square
/// it stands for.
///
/// green: one row's two cells {(r,c,a),(r,c',b)}, edge c -> c'.
/// black: a zig-zag prefix P_k(r, r2, col0) between two rows that starts at
///        symbol a and reaches symbol b after k steps (2 <= k <= f); edge
///        from col0 to the column holding b in row r2.
/// blue:  green-into-v + black-from-u-into-v + green-out-of-u composed into
///        one edge; the only colour where loops may occur.
struct ColouredEdge {
  EdgeColour colour = EdgeColour::green;
  int from = -1;
  int to = -1;
  PartialLatinSquare associated;

  // green: the defining row. black: the defining tuple (row, row2, col0, steps).
  int row = -1;
  int row2 = -1;
  int col0 = -1;
  int steps = 0;

  // blue: constituent edge ids.
  int green_in = -1;
  int black_part = -1;
  int green_out = -1;
};

/// Coloured digraph on the columns of a Latin square for one ordered symbol
/// pair (a, b) and zig-zag cutoff f. Also usable as a bare structural
/// fixture (no associated squares) via add_edge.
class ColouredDigraph {
 public:
  ColouredDigraph(int vertex_count, int sym_a, int sym_b, int cutoff);

  int vertex_count() const { return n_; }
  int sym_a() const { return a_; }
  int sym_b() const { return b_; }
  int cutoff() const { return f_; }

  const std::vector<ColouredEdge>& edges() const { return edges_; }
  const ColouredEdge& edge(int id) const { return edges_[id]; }
  std::span<const int> out(int v) const { return out_[v]; }

  int green_out(int v) const { return green_out_[v]; }
  int green_in(int v) const { return green_in_[v]; }
  /// Green edge built from row r, or -1 when absent (filtered or fixture).
  int green_edge_of_row(int r) const;

  int count(EdgeColour c) const;

  int add_edge(ColouredEdge e);

  /// One line per edge, "<colour> <from> <to>" plus "[r=.. r'=.. c0=.. k=..]"
  /// for black edges, sorted by (colour, from, to).
  std::string dump() const;

 private:
  int n_, a_, b_, f_;
  std::vector<ColouredEdge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<int> green_out_;
  std::vector<int> green_in_;
  std::vector<int> green_by_row_;
};

/// Builds the full coloured digraph of `l` for symbols (a, b) and cutoff f.
/// When `forbidden` is given, every edge whose associated square meets it is
/// dropped (and blue edges are composed only from surviving parts).
ColouredDigraph build_digraph(const LatinSquare& l, int a, int b, int f,
                              const PartialLatinSquare* forbidden = nullptr);

/// Sum of black-edge counts over all n(n-1) ordered symbol pairs.
long long black_edge_total(const LatinSquare& l, int f);

struct SymbolPairCount {
  int a = 0;
  int b = 0;
  long long black_edges = 0;
};

/// All ordered symbol pairs with their black-edge counts, sorted by
/// descending count, ties by (a, b).
std::vector<SymbolPairCount> best_symbol_pairs(const LatinSquare& l, int f);

/// The mate of an edge's associated square. Green: swap the two symbols.
/// Black: swap the two rows, then swap a and b. Blue: swap symbols within
/// each two-symbol column and swap a with b in one-symbol columns.
PartialLatinSquare mate_of(const PartialLatinSquare& p, EdgeColour colour, int a, int b);

/// A directed cycle v0 -> v1 -> ... -> v0 with distinct vertices; loops and
/// 2-circuits count (length is the number of edges).
struct DirectedCycle {
  std::vector<int> edge_ids;
  std::vector<int> vertices;
  int greens = 0;
  int blacks = 0;
  int blues = 0;

  int length() const { return static_cast<int>(edge_ids.size()); }
};

/// Validates a closed, vertex-distinct edge sequence and fills the counts.
DirectedCycle make_cycle(const ColouredDigraph& g, std::vector<int> edge_ids);

/// Minimum-length directed cycle over all colours; among minimum-length
/// cycles, the lexicographically smallest vertex sequence starting from its
/// smallest vertex. nullopt when the digraph is acyclic.
std::optional<DirectedCycle> shortest_cycle(const ColouredDigraph& g);

/// What assembly reports when two associated squares of a cycle overlap.
struct Overlap {
  enum class Kind {
    /// The overlapping pair walks the same two rows in opposite directions;
    /// their union closes a full row cycle, returned in `rescue`.
    row_pair_trade,
    /// A green edge (`witness_edge`) closes a strictly shorter directed
    /// cycle; the caller re-searches.
    shorter_cycle,
  };
  Kind kind = Kind::shorter_cycle;
  std::optional<LatinTrade> rescue;
  int witness_edge = -1;
  int edge_i = -1;
  int edge_j = -1;
};

using AssembleResult = std::variant<LatinTrade, Overlap>;

/// Unions the cycle's associated squares and their mates into a Latin trade
/// of size at most 2g + 2*bk*f + 2*y*(f+1). If two squares overlap, returns
/// the Overlap report instead.
AssembleResult assemble_trade(const LatinSquare& l, const ColouredDigraph& g,
                              const DirectedCycle& c);

/// Structural fixture on m*m vertices: green paths of length m, black edges
/// i -> j whenever m divides i-j and i < j. Has many black edges yet no
/// directed cycle.
ColouredDigraph remark_digraph(int m);

}  // namespace latin
