#include "core/finder.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace latin {

int ceil_int(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

int FinderConfig::f_for(int n) const {
  if (f_override > 0) return f_override;
  return ceil_int(d_const * std::sqrt(static_cast<double>(n))) + 1;
}

int trade_size_target(int n) {
  return std::min(2 * n, ceil_int(8.0 * std::sqrt(static_cast<double>(n))));
}

long long size_bound(long long g, long long bk, long long y, long long f) {
  return 2 * g + 2 * bk * f + 2 * y * (f + 1);
}

GreenPathPartition partition_green(const ColouredDigraph& g, int max_len) {
  if (max_len < 1) raise(Errc::invalid_argument, "max_len must be >= 1");
  const int n = g.vertex_count();
  GreenPathPartition part;
  part.max_len = max_len;
  std::vector<char> visited(n, 0);
  auto chunk = [&](const std::vector<int>& run) {
    for (size_t i = 0; i < run.size(); i += max_len)
      part.paths.emplace_back(run.begin() + i,
                              run.begin() + std::min(run.size(), i + max_len));
  };
  // Chains first (possible when edges were filtered away), from their heads.
  for (int v = 0; v < n; ++v) {
    if (visited[v] || g.green_out(v) < 0 || g.green_in(v) >= 0) continue;
    std::vector<int> run;
    int cur = v;
    while (cur >= 0 && !visited[cur]) {
      visited[cur] = 1;
      run.push_back(cur);
      int e = g.green_out(cur);
      cur = e >= 0 ? g.edge(e).to : -1;
    }
    chunk(run);
  }
  // Cycles, each started at its smallest vertex.
  for (int v = 0; v < n; ++v) {
    if (visited[v] || g.green_out(v) < 0) continue;
    std::vector<int> run;
    int cur = v;
    do {
      visited[cur] = 1;
      run.push_back(cur);
      cur = g.edge(g.green_out(cur)).to;
    } while (cur != v);
    chunk(run);
  }
  return part;
}

std::optional<CrossingCycle> find_crossing_cycle(int p, int q,
                                                 const std::vector<CrossingSegment>& segments) {
  if (p < 3 || q < 3) raise(Errc::path_too_short, "crossing search needs paths of >= 3 vertices");
  for (const auto& s : segments)
    if (s.pos_p < 0 || s.pos_p >= p || s.pos_q < 0 || s.pos_q >= q)
      raise(Errc::invalid_argument, "segment position out of range");

  std::optional<CrossingCycle> best;
  auto key = [](const CrossingCycle& c) {
    return std::tuple(c.length, c.low.pos_p, c.low.pos_q, c.high.pos_p, c.high.pos_q);
  };
  for (size_t i = 0; i < segments.size(); ++i)
    for (size_t j = i + 1; j < segments.size(); ++j) {
      const auto& s1 = segments[i];
      const auto& s2 = segments[j];
      int dp = s1.pos_p - s2.pos_p;
      int dq = s1.pos_q - s2.pos_q;
      if (static_cast<long long>(dp) * dq >= 0 || std::abs(dp) < 2 || std::abs(dq) < 2) continue;

      CrossingCycle c;
      c.low = (dp < 0) ? s1 : s2;
      c.high = (dp < 0) ? s2 : s1;
      // A segment already directed with the traversal is used as a black
      // edge; otherwise its blue composition enters one vertex later on the
      // source path and leaves one earlier on the target path.
      c.low_as_black = !c.low.from_p;
      c.high_as_black = c.high.from_p;
      c.p_from = c.low_as_black ? c.low.pos_p : c.low.pos_p + 1;
      c.p_to = c.high_as_black ? c.high.pos_p : c.high.pos_p - 1;
      c.q_from = c.high_as_black ? c.high.pos_q : c.high.pos_q + 1;
      c.q_to = c.low_as_black ? c.low.pos_q : c.low.pos_q - 1;
      c.non_green_edges = 2;
      c.length = (c.p_to - c.p_from) + (c.q_to - c.q_from) + 2;
      if (!best || key(c) < key(*best)) best = c;
    }
  return best;
}

std::optional<LatinTrade> assemble_following_reports(const LatinSquare& l,
                                                     const ColouredDigraph& g, DirectedCycle c) {
  for (int guard = 0; guard <= g.vertex_count() + 2; ++guard) {
    auto res = assemble_trade(l, g, c);
    if (auto* t = std::get_if<LatinTrade>(&res)) return *t;
    const auto& ov = std::get<Overlap>(res);
    if (ov.kind == Overlap::Kind::row_pair_trade) return *ov.rescue;
    // Splice the witness green edge with the stretch of the old cycle from
    // the witness's head back to its tail.
    const auto& w = g.edge(ov.witness_edge);
    const int m = c.length();
    int start = -1, end = -1;
    for (int i = 0; i < m; ++i) {
      if (c.vertices[i] == w.to) start = i;
      if (c.vertices[i] == w.from) end = i;
    }
    if (start < 0 || end < 0) return std::nullopt;
    std::vector<int> ids;
    for (int i = start; i != end; i = (i + 1) % m) ids.push_back(c.edge_ids[i]);
    ids.push_back(ov.witness_edge);
    DirectedCycle shorter = make_cycle(g, std::move(ids));
    if (shorter.length() >= c.length()) return std::nullopt;
    c = std::move(shorter);
  }
  return std::nullopt;
}

namespace {

void consider(LatinTrade& best, const LatinTrade& cand) {
  if (cand.size() < best.size()) best = cand;
}

void handle_assembly(const LatinSquare& l, const ColouredDigraph& g, const DirectedCycle& c,
                     LatinTrade& best) {
  if (auto t = assemble_following_reports(l, g, c)) consider(best, *t);
}

// Intercalates are the only trades smaller than 6 cells, and the row cycle
// scan already finds every intercalate (K = 2), so a best of <= 6 is optimal.
bool settled(const LatinTrade& best) { return best.size() <= 6; }

void search_pairs(const LatinSquare& l, int f, int limit, LatinTrade& best) {
  auto pairs = best_symbol_pairs(l, f);
  int tried = 0;
  for (const auto& pc : pairs) {
    if (tried++ >= limit || settled(best)) break;
    auto g = build_digraph(l, pc.a, pc.b, f);
    auto c = shortest_cycle(g);
    if (!c) continue;
    handle_assembly(l, g, *c, best);
  }
}

std::optional<DirectedCycle> realize_crossing(const ColouredDigraph& g,
                                              const std::vector<int>& path_p,
                                              const std::vector<int>& path_q,
                                              const CrossingCycle& plan,
                                              const std::vector<int>& blue_of_black) {
  auto hop = [&](const CrossingSegment& seg, bool as_black) {
    return as_black ? seg.tag : blue_of_black[seg.tag];
  };
  std::vector<int> ids;
  ids.push_back(hop(plan.low, plan.low_as_black));
  for (int t = plan.p_from; t < plan.p_to; ++t) ids.push_back(g.green_out(path_p[t]));
  ids.push_back(hop(plan.high, plan.high_as_black));
  for (int t = plan.q_from; t < plan.q_to; ++t) ids.push_back(g.green_out(path_q[t]));
  for (int id : ids)
    if (id < 0) return std::nullopt;
  return make_cycle(g, std::move(ids));
}

void proof_search(const LatinSquare& l, const FinderConfig& cfg, int f, LatinTrade& best) {
  const int n = l.order();
  auto pairs = best_symbol_pairs(l, f);
  auto g = build_digraph(l, pairs.front().a, pairs.front().b, f);

  // Shortest green cycle: a two-symbol trade of twice its length.
  {
    std::vector<char> visited(n, 0);
    std::vector<int> shortest;
    for (int v = 0; v < n; ++v) {
      if (visited[v] || g.green_out(v) < 0) continue;
      std::vector<int> cyc;
      int cur = v;
      do {
        visited[cur] = 1;
        cyc.push_back(cur);
        cur = g.edge(g.green_out(cur)).to;
      } while (cur != v);
      if (shortest.empty() || cyc.size() < shortest.size()) shortest = cyc;
    }
    if (!shortest.empty() && 2 * static_cast<int>(shortest.size()) < best.size()) {
      std::vector<int> ids;
      for (int v : shortest) ids.push_back(g.green_out(v));
      handle_assembly(l, g, make_cycle(g, ids), best);
    }
  }
  if (settled(best)) return;

  const int max_len =
      std::max(2, static_cast<int>(std::floor(cfg.k_const * std::sqrt(static_cast<double>(n)) + 1e-9)));
  auto part = partition_green(g, max_len);
  std::vector<int> path_of(n, -1), pos_of(n, -1);
  for (int i = 0; i < static_cast<int>(part.paths.size()); ++i)
    for (int t = 0; t < static_cast<int>(part.paths[i].size()); ++t) {
      path_of[part.paths[i][t]] = i;
      pos_of[part.paths[i][t]] = t;
    }

  std::vector<int> blue_of_black(g.edges().size(), -1);
  for (int id = 0; id < static_cast<int>(g.edges().size()); ++id)
    if (g.edge(id).colour == EdgeColour::blue) blue_of_black[g.edge(id).black_part] = id;

  // A black edge pointing backwards within one path closes a cycle at once.
  for (int id = 0; id < static_cast<int>(g.edges().size()); ++id) {
    const auto& e = g.edge(id);
    if (e.colour != EdgeColour::black) continue;
    if (path_of[e.from] < 0 || path_of[e.from] != path_of[e.to]) continue;
    if (pos_of[e.to] >= pos_of[e.from]) continue;
    const auto& path = part.paths[path_of[e.from]];
    std::vector<int> ids{id};
    for (int t = pos_of[e.to]; t < pos_of[e.from]; ++t) ids.push_back(g.green_out(path[t]));
    handle_assembly(l, g, make_cycle(g, ids), best);
    if (settled(best)) return;
  }

  // Crossing search between every pair of long-enough paths. Only results
  // within the bound certified for this route are kept.
  const int cert_bound = static_cast<int>(std::floor(
      2.0 * std::sqrt(static_cast<double>(n)) * (cfg.k_const + cfg.d_const - 1.0) + 4.0 + 1e-9));
  std::map<std::pair<int, int>, std::vector<CrossingSegment>> segments;
  for (int id = 0; id < static_cast<int>(g.edges().size()); ++id) {
    const auto& e = g.edge(id);
    if (e.colour != EdgeColour::black) continue;
    int pf = path_of[e.from], pt = path_of[e.to];
    if (pf < 0 || pt < 0 || pf == pt) continue;
    if (part.paths[pf].size() < 3 || part.paths[pt].size() < 3) continue;
    auto key = std::minmax(pf, pt);
    CrossingSegment s;
    if (pf == key.first) {
      s.pos_p = pos_of[e.from];
      s.pos_q = pos_of[e.to];
      s.from_p = true;
    } else {
      s.pos_p = pos_of[e.to];
      s.pos_q = pos_of[e.from];
      s.from_p = false;
    }
    s.tag = id;
    segments[{key.first, key.second}].push_back(s);
  }
  for (const auto& [key, segs] : segments) {
    if (segs.size() < 2 || settled(best)) continue;
    auto plan = find_crossing_cycle(static_cast<int>(part.paths[key.first].size()),
                                    static_cast<int>(part.paths[key.second].size()), segs);
    if (!plan) continue;
    auto cyc = realize_crossing(g, part.paths[key.first], part.paths[key.second], *plan,
                                blue_of_black);
    if (!cyc) continue;
    auto t = assemble_following_reports(l, g, *cyc);
    if (t && t->size() <= cert_bound) consider(best, *t);
  }

  if (!settled(best)) search_pairs(l, f, 3, best);
}

}  // namespace

LatinTrade find_small_trade(const LatinSquare& l, const FinderConfig& cfg) {
  const int n = l.order();
  if (n < 2) raise(Errc::order_too_small, "no trade exists for n < 2");
  const int f = cfg.f_for(n);

  LatinTrade best = min_row_cycle_trade(l);
  if (!settled(best)) {
    switch (cfg.strategy) {
      case FinderStrategy::greedy:
        search_pairs(l, f, 10, best);
        break;
      case FinderStrategy::exhaustive_pairs:
        search_pairs(l, f, n * (n - 1), best);
        break;
      case FinderStrategy::proof:
        proof_search(l, cfg, f, best);
        break;
    }
  }
  ensure(l.contains(best.trade()), "found trade is contained in the square");
  if (best.size() > trade_size_target(n))
    raise(Errc::verification_failed, "no trade within min(2n, ceil(8*sqrt(n))) was found");
  return best;
}

std::optional<LatinTrade> pair_trade(const LatinSquare& l, int a, int b, int f) {
  auto g = build_digraph(l, a, b, f);
  auto c = shortest_cycle(g);
  if (!c) return std::nullopt;
  auto t = assemble_following_reports(l, g, *c);
  ensure(t.has_value(), "a minimum cycle always assembles");
  return t;
}

}  // namespace latin
