#pragma once

// Conditions (ii), (iii) and (iv) of the main hyperbolicity criterion.
//
// (ii) every region is a disk or an annulus; (iii) no edge has annuli on both
// sides; (iv) no simple closed curve meets the projection exactly in
// crossings, bisecting each, with both blocked opposite regions annular.
//
// The (iv) search works over passages (crossing, corner axis) whose blocked
// regions are both annuli.  A curve is a cyclic passage sequence joined by
// chords through regions; it is simple iff no crossing repeats and the chords
// within each region are pairwise non-interleaved in the region's cyclic
// corner order (winding around punctures cannot rescue interleaved chords,
// and is irrelevant otherwise).  The DFS is exact; a node budget turns
// oversized searches into an explicit undecided outcome.

#include <optional>

#include "skd/regions.hpp"

namespace skd {

struct ConditionIIFailure {
  RegionId region;  // smallest region with two or more punctures
};

inline std::optional<ConditionIIFailure> check_condition_ii(const RegionMap& rm) {
  for (const auto& reg : rm.regions)
    if (reg.cls == RegionClass::Other) return ConditionIIFailure{reg.id};
  return std::nullopt;
}

struct ConditionIIIFailure {
  RegionId r1, r2;  // both annuli (equal when a region is self-adjacent)
  EdgeId edge;      // smallest offending edge
};

inline std::optional<ConditionIIIFailure> check_condition_iii(const RegionMap& rm) {
  for (EdgeId e = 0; e < (EdgeId)rm.edge_sides.size(); ++e) {
    auto [a, b] = rm.edge_sides[e];
    if (rm.regions[a].cls == RegionClass::Annulus && rm.regions[b].cls == RegionClass::Annulus)
      return ConditionIIIFailure{std::min(a, b), std::max(a, b), e};
  }
  return std::nullopt;
}

struct Passage {
  CrossingId crossing = -1;
  int axis = 0;  // traversed corners (crossing, axis) and (crossing, axis+2)

  CornerId corner(int end) const { return make_corner(crossing, (axis + 2 * end) & 3); }

  friend bool operator==(const Passage& a, const Passage& b) {
    return a.crossing == b.crossing && a.axis == b.axis;
  }
};

struct PassageEndpoint {
  int passage = -1;  // index into PassageGraph::passages
  int end = 0;       // which traversed corner
  int corner_pos = 0;
};

struct PassageGraph {
  std::vector<Passage> passages;                          // eligible, by (crossing, axis)
  std::vector<std::vector<PassageEndpoint>> connections;  // per region, sorted by corner_pos
};

inline bool passage_eligible(const Diagram& d, const RegionMap& rm, CrossingId c, int axis) {
  auto opp = opposite_corner_regions(d, rm, c, axis);
  return rm.regions[opp.blocked[0]].cls == RegionClass::Annulus &&
         rm.regions[opp.blocked[1]].cls == RegionClass::Annulus;
}

inline PassageGraph build_passage_graph(const Diagram& d, const RegionMap& rm) {
  PassageGraph g;
  g.connections.resize(rm.n_regions());
  for (CrossingId c = 0; c < d.n_crossings; ++c)
    for (int axis = 0; axis < 2; ++axis) {
      if (!passage_eligible(d, rm, c, axis)) continue;
      int idx = (int)g.passages.size();
      g.passages.push_back({c, axis});
      for (int end = 0; end < 2; ++end) {
        CornerId k = g.passages[idx].corner(end);
        g.connections[rm.corner_region[k]].push_back({idx, end, rm.corner_pos[k]});
      }
    }
  for (auto& v : g.connections)
    std::sort(v.begin(), v.end(), [](const PassageEndpoint& a, const PassageEndpoint& b) {
      return a.corner_pos < b.corner_pos;
    });
  return g;
}

struct CurveArc {
  RegionId region = -1;
  CornerId from_corner = -1;
  CornerId to_corner = -1;
};

/// A condition-(iv) witness: arcs[i] joins passages[i]'s exit corner to
/// passages[i+1 mod k]'s entry corner.
struct CurveWitness {
  std::vector<Passage> passages;
  std::vector<CurveArc> arcs;
};

/// Re-verify every witness invariant from scratch against the diagram.
inline bool verify_curve_witness(const Diagram& d, const RegionMap& rm, const CurveWitness& w) {
  const size_t k = w.passages.size();
  if (k < 1 || w.arcs.size() != k) return false;
  std::vector<char> used(d.n_crossings, 0);
  for (const auto& p : w.passages) {
    if (p.crossing < 0 || p.crossing >= d.n_crossings || (p.axis & ~1)) return false;
    if (used[p.crossing]) return false;  // a simple curve passes a crossing once
    used[p.crossing] = 1;
    if (!passage_eligible(d, rm, p.crossing, p.axis)) return false;
  }
  for (size_t i = 0; i < k; ++i) {
    const Passage& cur = w.passages[i];
    const Passage& nxt = w.passages[(i + 1) % k];
    const CurveArc& arc = w.arcs[i];
    // the arc must leave cur through one traversed corner and reach nxt
    // through one of its corners, inside a single region
    bool from_ok = arc.from_corner == cur.corner(0) || arc.from_corner == cur.corner(1);
    bool to_ok = arc.to_corner == nxt.corner(0) || arc.to_corner == nxt.corner(1);
    if (!from_ok || !to_ok) return false;
    if (rm.corner_region[arc.from_corner] != arc.region ||
        rm.corner_region[arc.to_corner] != arc.region)
      return false;
    // each passage is crossed, not doubled back on: consecutive arcs must use
    // different corners of the shared passage
    const CurveArc& prev = w.arcs[(i + k - 1) % k];
    if (prev.to_corner == arc.from_corner) return false;
    if (k == 1 && arc.from_corner == arc.to_corner) return false;
  }
  // chords within each region must be pairwise non-interleaved
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      if (w.arcs[i].region != w.arcs[j].region) continue;
      int m = rm.regions[w.arcs[i].region].size();
      if (chords_interleave(m, rm.corner_pos[w.arcs[i].from_corner],
                            rm.corner_pos[w.arcs[i].to_corner],
                            rm.corner_pos[w.arcs[j].from_corner],
                            rm.corner_pos[w.arcs[j].to_corner]))
        return false;
    }
  return true;
}

enum class SearchOutcome { Pass, Fail, Undecided };

struct ConditionIvResult {
  SearchOutcome outcome = SearchOutcome::Pass;
  std::optional<CurveWitness> witness;
  long long nodes = 0;
  bool filtered = false;  // the acyclicity filter settled it without searching
};

inline constexpr long long kDefaultCurveSearchBudget = 10'000'000;

namespace ivdetail {

// Necessary condition: a witness is a closed walk with distinct passages in
// the multigraph (regions, passages), so some component must contain a cycle.
inline bool multigraph_has_cycle(const PassageGraph& g, int n_regions) {
  std::vector<int> parent(n_regions);
  for (int i = 0; i < n_regions; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<int, int>> edges;  // per passage: the regions of its two corners
  edges.assign(g.passages.size(), {-1, -1});
  for (int r = 0; r < n_regions; ++r)
    for (const auto& ep : g.connections[r])
      (ep.end == 0 ? edges[ep.passage].first : edges[ep.passage].second) = r;
  for (auto [a, b] : edges) {
    if (a == b) return true;  // self-loop closes immediately
    int ra = find(a), rb = find(b);
    if (ra == rb) return true;
    parent[ra] = rb;
  }
  return false;
}

struct Searcher {
  const Diagram& d;
  const RegionMap& rm;
  const PassageGraph& g;
  long long budget;
  long long nodes = 0;
  bool exhausted = false;

  std::vector<char> used;
  std::vector<int> chain;                        // passage indices
  std::vector<int> entry_end;                    // entry corner end per chain element
  std::vector<std::vector<std::pair<int, int>>> region_chords;  // per region: corner positions

  Searcher(const Diagram& d_, const RegionMap& rm_, const PassageGraph& g_, long long budget_)
      : d(d_), rm(rm_), g(g_), budget(budget_) {
    used.assign(d.n_crossings, 0);
    region_chords.resize(rm.n_regions());
  }

  bool chord_fits(RegionId r, int a, int b) const {
    int m = rm.regions[r].size();
    for (auto [x, y] : region_chords[r])
      if (chords_interleave(m, a, b, x, y)) return false;
    return true;
  }

  std::optional<CurveWitness> make_witness() const {
    CurveWitness w;
    const size_t k = chain.size();
    for (size_t i = 0; i < k; ++i) w.passages.push_back(g.passages[chain[i]]);
    for (size_t i = 0; i < k; ++i) {
      const Passage& cur = w.passages[i];
      const Passage& nxt = w.passages[(i + 1) % k];
      CurveArc arc;
      arc.from_corner = cur.corner(1 - entry_end[i]);
      arc.to_corner = nxt.corner(entry_end[(i + 1) % k]);
      arc.region = rm.corner_region[arc.from_corner];
      w.arcs.push_back(arc);
    }
    if (!verify_curve_witness(d, rm, w)) throw std::logic_error("search produced an invalid witness");
    return w;
  }

  // returns a witness if one closes from the current chain
  std::optional<CurveWitness> extend() {
    if (++nodes > budget) {
      exhausted = true;
      return std::nullopt;
    }
    const int last = chain.back();
    const CornerId exit_corner = g.passages[last].corner(1 - entry_end.back());
    const RegionId r = rm.corner_region[exit_corner];
    const int exit_pos = rm.corner_pos[exit_corner];

    // try to close back to the start passage's entry corner
    const CornerId start_entry = g.passages[chain.front()].corner(entry_end.front());
    if (rm.corner_region[start_entry] == r) {
      int a = exit_pos, b = rm.corner_pos[start_entry];
      if (a != b && chord_fits(r, a, b)) return make_witness();
    }

    // canonical extension order: crossing, axis, then corner position; the
    // connections are position-sorted, so collect and sort by passage order
    std::vector<PassageEndpoint> cands;
    for (const auto& ep : g.connections[r]) {
      const Passage& p = g.passages[ep.passage];
      if (p.crossing <= g.passages[chain.front()].crossing) continue;
      if (used[p.crossing]) continue;
      cands.push_back(ep);
    }
    std::sort(cands.begin(), cands.end(), [&](const PassageEndpoint& x, const PassageEndpoint& y) {
      const Passage& px = g.passages[x.passage];
      const Passage& py = g.passages[y.passage];
      if (px.crossing != py.crossing) return px.crossing < py.crossing;
      if (px.axis != py.axis) return px.axis < py.axis;
      return x.corner_pos < y.corner_pos;
    });
    for (const auto& ep : cands) {
      if (exhausted) return std::nullopt;
      if (!chord_fits(r, exit_pos, ep.corner_pos)) continue;
      region_chords[r].emplace_back(exit_pos, ep.corner_pos);
      used[g.passages[ep.passage].crossing] = 1;
      chain.push_back(ep.passage);
      entry_end.push_back(ep.end);
      if (auto w = extend()) return w;
      entry_end.pop_back();
      chain.pop_back();
      used[g.passages[ep.passage].crossing] = 0;
      region_chords[r].pop_back();
    }
    return std::nullopt;
  }
};

}  // namespace ivdetail

/// Exact decision of condition (iv).  Fail returns the canonical first
/// witness; Undecided is only possible through budget exhaustion.
inline ConditionIvResult check_condition_iv(const Diagram& d, const RegionMap& rm,
                                            long long budget = kDefaultCurveSearchBudget) {
  ConditionIvResult res;
  PassageGraph g = build_passage_graph(d, rm);
  if (g.passages.empty()) {
    res.filtered = true;
    return res;
  }
  if (!ivdetail::multigraph_has_cycle(g, rm.n_regions())) {
    res.filtered = true;
    return res;
  }
  ivdetail::Searcher s(d, rm, g, budget);
  for (int start = 0; start < (int)g.passages.size(); ++start) {
    s.chain.assign(1, start);
    s.entry_end.assign(1, 0);  // reversal symmetry: fix the entry corner of the start
    s.used[g.passages[start].crossing] = 1;
    auto w = s.extend();
    s.used[g.passages[start].crossing] = 0;
    res.nodes = s.nodes;
    if (w) {
      res.outcome = SearchOutcome::Fail;
      res.witness = std::move(w);
      return res;
    }
    if (s.exhausted) {
      res.outcome = SearchOutcome::Undecided;
      return res;
    }
  }
  res.outcome = SearchOutcome::Pass;
  return res;
}

}  // namespace skd
