#include "core/digraph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

namespace latin {

const char* colour_name(EdgeColour c) {
  switch (c) {
    case EdgeColour::green: return "green";
    case EdgeColour::black: return "black";
    case EdgeColour::blue: return "blue";
  }
  return "?";
}

ColouredDigraph::ColouredDigraph(int vertex_count, int sym_a, int sym_b, int cutoff)
    : n_(vertex_count), a_(sym_a), b_(sym_b), f_(cutoff) {
  if (vertex_count < 1) raise(Errc::invalid_argument, "vertex count must be >= 1");
  out_.resize(n_);
  green_out_.assign(n_, -1);
  green_in_.assign(n_, -1);
  green_by_row_.assign(n_, -1);
}

int ColouredDigraph::add_edge(ColouredEdge e) {
  if (e.from < 0 || e.from >= n_ || e.to < 0 || e.to >= n_)
    raise(Errc::invalid_argument, "edge endpoint out of range");
  int id = static_cast<int>(edges_.size());
  if (e.colour != EdgeColour::blue) ensure(e.from != e.to, "only blue edges may be loops");
  if (e.colour == EdgeColour::green) {
    ensure(green_out_[e.from] < 0 && green_in_[e.to] < 0,
           "green out- and in-degrees stay at most one");
    green_out_[e.from] = id;
    green_in_[e.to] = id;
    if (e.row >= 0 && e.row < n_) green_by_row_[e.row] = id;
  }
  out_[e.from].push_back(id);
  edges_.push_back(std::move(e));
  return id;
}

int ColouredDigraph::green_edge_of_row(int r) const {
  if (r < 0 || r >= static_cast<int>(green_by_row_.size())) return -1;
  return green_by_row_[r];
}

int ColouredDigraph::count(EdgeColour c) const {
  int k = 0;
  for (const auto& e : edges_) k += (e.colour == c);
  return k;
}

std::string ColouredDigraph::dump() const {
  std::vector<const ColouredEdge*> sorted;
  sorted.reserve(edges_.size());
  for (const auto& e : edges_) sorted.push_back(&e);
  auto rank = [](EdgeColour c) {
    switch (c) {
      case EdgeColour::black: return 0;
      case EdgeColour::blue: return 1;
      case EdgeColour::green: return 2;
    }
    return 3;
  };
  std::stable_sort(sorted.begin(), sorted.end(), [&](const ColouredEdge* x, const ColouredEdge* y) {
    return std::tuple(rank(x->colour), x->from, x->to) <
           std::tuple(rank(y->colour), y->from, y->to);
  });
  std::ostringstream os;
  for (const ColouredEdge* e : sorted) {
    os << colour_name(e->colour) << ' ' << e->from << ' ' << e->to;
    if (e->colour == EdgeColour::black)
      os << " [r=" << e->row << " r'=" << e->row2 << " c0=" << e->col0 << " k=" << e->steps << "]";
    os << '\n';
  }
  return os.str();
}

ColouredDigraph build_digraph(const LatinSquare& l, int a, int b, int f,
                              const PartialLatinSquare* forbidden) {
  const int n = l.order();
  if (a < 0 || a >= n || b < 0 || b >= n || a == b)
    raise(Errc::bad_symbols, "need two distinct symbols in range");
  if (f < 1) raise(Errc::invalid_argument, "cutoff f must be >= 1");

  ColouredDigraph g(n, a, b, f);
  auto excluded = [&](const PartialLatinSquare& p) {
    return forbidden != nullptr && !forbidden->empty() && forbidden->intersects(p);
  };

  // Green: for each row, an edge from the column of a to the column of b.
  for (int r = 0; r < n; ++r) {
    int c = l.column_of(r, a);
    int c2 = l.column_of(r, b);
    auto assoc = PartialLatinSquare::from_triples(n, {{r, c, a}, {r, c2, b}});
    if (excluded(assoc)) continue;
    ColouredEdge e;
    e.colour = EdgeColour::green;
    e.from = c;
    e.to = c2;
    e.associated = std::move(assoc);
    e.row = r;
    g.add_edge(std::move(e));
  }

  // Black: walk the zig-zag from every (r, c0, a) against every other row
  // until it reaches b (edge, when 2 <= k <= f) or closes back at a.
  std::vector<Triple> acc;
  for (int r = 0; r < n; ++r) {
    const int c0 = l.column_of(r, a);
    for (int r2 = 0; r2 < n; ++r2) {
      if (r2 == r) continue;
      acc.clear();
      int c = c0;
      for (int k = 1; k <= f; ++k) {
        int next = l.at(r2, c);  // e_k
        acc.push_back({r, c, l.at(r, c)});
        acc.push_back({r2, c, next});
        if (next == a) break;  // row cycle closed without meeting b
        if (next == b) {
          if (k >= 2) {
            auto assoc = PartialLatinSquare::from_triples(n, acc);
            if (!excluded(assoc)) {
              ColouredEdge e;
              e.colour = EdgeColour::black;
              e.from = c0;
              e.to = c;
              e.associated = std::move(assoc);
              e.row = r;
              e.row2 = r2;
              e.col0 = c0;
              e.steps = k;
              g.add_edge(std::move(e));
            }
          }
          break;  // b occurs at most once per row cycle
        }
        c = l.column_of(r, next);
      }
    }
  }

  // Blue: green into v, black u -> v, green out of u.
  const int edge_count = static_cast<int>(g.edges().size());
  for (int id = 0; id < edge_count; ++id) {
    if (g.edge(id).colour != EdgeColour::black) continue;
    const int u = g.edge(id).from;
    const int v = g.edge(id).to;
    const int gin = g.green_in(v);
    const int gout = g.green_out(u);
    if (gin < 0 || gout < 0) continue;  // constituent dropped by the filter
    ColouredEdge e;
    e.colour = EdgeColour::blue;
    e.from = g.edge(gin).from;
    e.to = g.edge(gout).to;
    e.associated =
        g.edge(gin).associated.merged_with(g.edge(id).associated).merged_with(g.edge(gout).associated);
    e.green_in = gin;
    e.black_part = id;
    e.green_out = gout;
    g.add_edge(std::move(e));
  }
  return g;
}

namespace {

// Walks every (r, c-with-a, r2) zig-zag once, crediting each reached symbol's
// ordered pair. Shared by the total and the per-pair counts.
void count_black_edges(const LatinSquare& l, int f,
                       const std::function<void(int a, int b)>& credit) {
  const int n = l.order();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const int a = l.at(r, c);
      for (int r2 = 0; r2 < n; ++r2) {
        if (r2 == r) continue;
        int col = c;
        for (int k = 1; k <= f; ++k) {
          int next = l.at(r2, col);
          if (next == a) break;
          if (k >= 2) credit(a, next);
          col = l.column_of(r, next);
        }
      }
    }
}

}  // namespace

long long black_edge_total(const LatinSquare& l, int f) {
  if (f < 1) raise(Errc::invalid_argument, "cutoff f must be >= 1");
  long long total = 0;
  count_black_edges(l, f, [&](int, int) { ++total; });
  return total;
}

std::vector<SymbolPairCount> best_symbol_pairs(const LatinSquare& l, int f) {
  const int n = l.order();
  if (n < 2) raise(Errc::order_too_small, "need order >= 2");
  if (f < 1) raise(Errc::invalid_argument, "cutoff f must be >= 1");
  std::vector<long long> counts(static_cast<size_t>(n) * n, 0);
  count_black_edges(l, f, [&](int a, int b) { ++counts[a * n + b]; });
  std::vector<SymbolPairCount> out;
  out.reserve(static_cast<size_t>(n) * (n - 1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b) out.push_back({a, b, counts[a * n + b]});
  std::stable_sort(out.begin(), out.end(), [](const SymbolPairCount& x, const SymbolPairCount& y) {
    if (x.black_edges != y.black_edges) return x.black_edges > y.black_edges;
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  });
  return out;
}

PartialLatinSquare mate_of(const PartialLatinSquare& p, EdgeColour colour, int a, int b) {
  const int n = p.order();
  auto swap_ab = [&](int s) { return s == a ? b : (s == b ? a : s); };

  if (colour == EdgeColour::green) {
    if (p.size() != 2) raise(Errc::malformed_associated_square, "green square has two cells");
    const Triple& x = p.triples()[0];
    const Triple& y = p.triples()[1];
    if (x.row != y.row || !((x.sym == a && y.sym == b) || (x.sym == b && y.sym == a)))
      raise(Errc::malformed_associated_square, "green square holds a and b in one row");
    return PartialLatinSquare::from_triples(n, {{x.row, x.col, y.sym}, {y.row, y.col, x.sym}});
  }

  if (colour == EdgeColour::black) {
    int row_a = -1, row_b = -1, count_a = 0, count_b = 0;
    for (const Triple& t : p.triples()) {
      if (t.sym == a) row_a = t.row, ++count_a;
      if (t.sym == b) row_b = t.row, ++count_b;
    }
    if (count_a != 1 || count_b != 1 || row_a == row_b)
      raise(Errc::malformed_associated_square, "black square holds a and b once, in distinct rows");
    std::vector<Triple> m;
    m.reserve(p.size());
    for (const Triple& t : p.triples()) {
      if (t.row != row_a && t.row != row_b)
        raise(Errc::malformed_associated_square, "black square spans exactly two rows");
      int other = (t.row == row_a) ? row_b : row_a;
      m.push_back({other, t.col, swap_ab(t.sym)});
    }
    return PartialLatinSquare::from_triples(n, std::move(m));
  }

  // Blue: swap within two-symbol columns; swap a<->b in one-symbol columns.
  std::map<int, std::vector<Triple>> by_col;
  for (const Triple& t : p.triples()) by_col[t.col].push_back(t);
  std::vector<Triple> m;
  m.reserve(p.size());
  for (auto& [col, cells] : by_col) {
    if (cells.size() == 2) {
      m.push_back({cells[0].row, col, cells[1].sym});
      m.push_back({cells[1].row, col, cells[0].sym});
    } else if (cells.size() == 1) {
      if (cells[0].sym != a && cells[0].sym != b)
        raise(Errc::malformed_associated_square, "one-symbol column of a blue square holds a or b");
      m.push_back({cells[0].row, col, swap_ab(cells[0].sym)});
    } else {
      raise(Errc::malformed_associated_square, "blue square has one or two cells per column");
    }
  }
  return PartialLatinSquare::from_triples(n, std::move(m));
}

DirectedCycle make_cycle(const ColouredDigraph& g, std::vector<int> edge_ids) {
  if (edge_ids.empty()) raise(Errc::not_a_cycle, "empty edge list");
  DirectedCycle c;
  for (int id : edge_ids) {
    if (id < 0 || id >= static_cast<int>(g.edges().size()))
      raise(Errc::not_a_cycle, "edge id out of range");
    c.vertices.push_back(g.edge(id).from);
  }
  const size_t m = edge_ids.size();
  for (size_t i = 0; i < m; ++i) {
    const auto& e = g.edge(edge_ids[i]);
    const auto& next = g.edge(edge_ids[(i + 1) % m]);
    if (e.to != next.from) raise(Errc::not_a_cycle, "consecutive edges do not share a vertex");
  }
  std::vector<int> sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    raise(Errc::not_a_cycle, "cycle vertices are not distinct");
  for (int id : edge_ids) {
    switch (g.edge(id).colour) {
      case EdgeColour::green: ++c.greens; break;
      case EdgeColour::black: ++c.blacks; break;
      case EdgeColour::blue: ++c.blues; break;
    }
  }
  c.edge_ids = std::move(edge_ids);
  return c;
}

namespace {

// Among parallel edges prefer the smallest associated square, then the
// "cheapest" colour, then insertion order.
int pick_edge(const ColouredDigraph& g, int from, int to) {
  auto rank = [](EdgeColour c) {
    switch (c) {
      case EdgeColour::green: return 0;
      case EdgeColour::black: return 1;
      case EdgeColour::blue: return 2;
    }
    return 3;
  };
  int best = -1;
  for (int id : g.out(from)) {
    const auto& e = g.edge(id);
    if (e.to != to) continue;
    if (best < 0) {
      best = id;
      continue;
    }
    const auto& cur = g.edge(best);
    auto key = [&](const ColouredEdge& x, int xid) {
      return std::tuple(x.associated.size(), rank(x.colour), xid);
    };
    if (key(e, id) < key(cur, best)) best = id;
  }
  return best;
}

}  // namespace

std::optional<DirectedCycle> shortest_cycle(const ColouredDigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> succ(n);
  std::vector<char> has_loop(n, 0);
  for (const auto& e : g.edges()) {
    if (e.from == e.to)
      has_loop[e.from] = 1;
    else
      succ[e.from].push_back(e.to);
  }
  for (auto& s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  constexpr int kInf = std::numeric_limits<int>::max();
  int best_len = kInf, best_start = -1;
  for (int v = 0; v < n; ++v)
    if (has_loop[v]) {
      best_len = 1;
      best_start = v;
      break;
    }

  std::vector<int> dist(n);
  if (best_len > 1) {
    // Every cycle is found from its smallest vertex, using larger vertices only.
    for (int s = 0; s < n && best_len > 2; ++s) {
      std::fill(dist.begin(), dist.end(), -1);
      std::queue<int> q;
      dist[s] = 0;
      q.push(s);
      int found = kInf;
      while (!q.empty() && found == kInf) {
        int u = q.front();
        q.pop();
        if (dist[u] + 1 >= best_len) break;
        for (int w : succ[u]) {
          if (w == s) {
            found = dist[u] + 1;
            break;
          }
          if (w > s && dist[w] < 0) {
            dist[w] = dist[u] + 1;
            q.push(w);
          }
        }
      }
      if (found < best_len) {
        best_len = found;
        best_start = s;
      }
    }
  }
  if (best_start < 0) return std::nullopt;

  std::vector<int> edge_ids;
  if (best_len == 1) {
    edge_ids.push_back(pick_edge(g, best_start, best_start));
  } else {
    const int s = best_start;
    // Distances towards s over vertices > s, for lexicographic reconstruction.
    std::vector<std::vector<int>> pred(n);
    for (const auto& e : g.edges())
      if (e.from != e.to) pred[e.to].push_back(e.from);
    std::vector<int> dist_to(n, -1);
    std::queue<int> q;
    for (int u : pred[s])
      if (u > s && dist_to[u] < 0) {
        dist_to[u] = 1;
        q.push(u);
      }
    while (!q.empty()) {
      int w = q.front();
      q.pop();
      for (int u : pred[w])
        if (u > s && dist_to[u] < 0) {
          dist_to[u] = dist_to[w] + 1;
          q.push(u);
        }
    }
    std::vector<int> seq{s};
    int cur = s;
    for (int remaining = best_len; remaining > 1; --remaining) {
      int next = -1;
      for (int w : succ[cur])
        if (w > s && dist_to[w] == remaining - 1) {
          next = w;
          break;
        }
      ensure(next >= 0, "shortest cycle reconstruction finds a successor");
      seq.push_back(next);
      cur = next;
    }
    for (size_t i = 0; i < seq.size(); ++i)
      edge_ids.push_back(pick_edge(g, seq[i], seq[(i + 1) % seq.size()]));
  }
  return make_cycle(g, std::move(edge_ids));
}

namespace {

const ColouredEdge* black_part_of(const ColouredDigraph& g, int edge_id) {
  const ColouredEdge& e = g.edge(edge_id);
  if (e.colour == EdgeColour::black) return &e;
  if (e.colour == EdgeColour::blue) return &g.edge(e.black_part);
  return nullptr;
}

}  // namespace

AssembleResult assemble_trade(const LatinSquare& l, const ColouredDigraph& g,
                              const DirectedCycle& c) {
  make_cycle(g, c.edge_ids);  // re-validate; throws not_a_cycle

  const int m = c.length();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto& pi = g.edge(c.edge_ids[i]).associated;
      const auto& pj = g.edge(c.edge_ids[j]).associated;
      if (!pi.intersects(pj)) continue;

      const ColouredEdge* bi = black_part_of(g, c.edge_ids[i]);
      const ColouredEdge* bj = black_part_of(g, c.edge_ids[j]);
      ensure(bi != nullptr && bj != nullptr,
             "green squares cannot overlap anything on a vertex-distinct cycle");
      Overlap ov;
      ov.edge_i = i;
      ov.edge_j = j;
      if (bi->row == bj->row && bi->row2 == bj->row2) {
        // Same walk shared by a black edge and its blue composition: the
        // green edge into the walk's terminal column closes a shorter cycle.
        ov.kind = Overlap::Kind::shorter_cycle;
        ov.witness_edge = g.green_edge_of_row(bi->row2);
        ensure(ov.witness_edge >= 0, "witness green edge survives filtering");
        return ov;
      }
      if (bi->row == bj->row2 && bi->row2 == bj->row) {
        // Opposite walks over one row pair: together they close the full
        // row cycle, a trade of size 2(k + l).
        ov.kind = Overlap::Kind::row_pair_trade;
        ov.rescue = row_cycle(l, bi->row, bi->row2, bi->col0);
        ensure(ov.rescue->size() == 2 * (bi->steps + bj->steps),
               "opposite walks cover the row cycle exactly");
        return ov;
      }
      int shared = -1;
      for (int r : {bi->row, bi->row2})
        if (r == bj->row || r == bj->row2) shared = r;
      ensure(shared >= 0, "overlapping walks share a row");
      ov.kind = Overlap::Kind::shorter_cycle;
      ov.witness_edge = g.green_edge_of_row(shared);
      ensure(ov.witness_edge >= 0, "witness green edge survives filtering");
      return ov;
    }

  PartialLatinSquare t(g.vertex_count());
  PartialLatinSquare mate(g.vertex_count());
  for (int id : c.edge_ids) {
    const auto& e = g.edge(id);
    t = t.merged_with(e.associated);
    mate = mate.merged_with(mate_of(e.associated, e.colour, g.sym_a(), g.sym_b()));
  }
  LatinTrade trade = LatinTrade::make(std::move(t), std::move(mate));
  ensure(l.contains(trade.trade()), "assembled trade is contained in the square");
  const long long bound = 2LL * c.greens + 2LL * c.blacks * g.cutoff() +
                          2LL * c.blues * (g.cutoff() + 1);
  ensure(trade.size() <= bound, "assembled trade respects the cycle size bound");
  return trade;
}

ColouredDigraph remark_digraph(int m) {
  if (m < 2) raise(Errc::invalid_argument, "m must be >= 2");
  const int n = m * m;
  ColouredDigraph g(n, 0, 1, 1);
  for (int k = 0; k < m; ++k)
    for (int v = k * m; v + 1 < (k + 1) * m; ++v) {
      ColouredEdge e;
      e.colour = EdgeColour::green;
      e.from = v;
      e.to = v + 1;
      e.associated = PartialLatinSquare(n);
      g.add_edge(std::move(e));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + m; j < n; j += m) {
      ColouredEdge e;
      e.colour = EdgeColour::black;
      e.from = i;
      e.to = j;
      e.associated = PartialLatinSquare(n);
      g.add_edge(std::move(e));
    }
  return g;
}

}  // namespace latin
