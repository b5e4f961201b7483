#pragma once

// Reducedness and weak primeness.
//
// Candidate circles meet the projection in one double point (a crossing
// passage, for reducedness) or two transversal edge points (for weak
// primeness).  A circle is cut along combinatorially: cut edges are
// subdivided, passed crossings and cut points are doubled, traversed regions
// are split by the circle's chords, and each resulting piece is classified by
// a direct V - E + F count of its cells.  Chords of a capped (disk) region
// with interleaved boundary endpoints cannot be embedded disjointly, so such
// candidates are rejected as malformed.
//
// Punctures of a traversed region can be isotoped to either side of the
// chords running through it; a CutCircle therefore carries an explicit
// assignment of those punctures to sub-faces, and the scans below try the
// extremal assignments only (all punctures pushed away from the candidate
// disk side), which is exhaustive for disk detection.

#include <map>
#include <optional>

#include "skd/regions.hpp"

namespace skd {

enum class CutKind { EdgePair, CrossingLoop };

/// A candidate circle.  EdgePair: the circle crosses edge_a and edge_b once
/// each (the same edge twice when equal); arc 0 runs from the cut on edge_a
/// to the cut on edge_b through the region right of bank_a (which must also
/// be right of bank_b), arc 1 through the region of the mate darts.
/// CrossingLoop: the circle bisects `crossing` through the opposite corners
/// (crossing, corner_axis) and (crossing, corner_axis+2), which must lie in
/// one region, closed by a single chord through that region.
struct CutCircle {
  CutKind kind = CutKind::EdgePair;
  EdgeId edge_a = -1, edge_b = -1;
  DartId bank_a = -1, bank_b = -1;
  CrossingId crossing = -1;
  int corner_axis = 0;
  // (puncture index, sub-face id) for every puncture located in a traversed
  // region; sub-face ids are the canonical ones produced by the cut.
  std::vector<std::pair<int, int>> puncture_subface;
};

struct SideClassification {
  int euler = 0;
  int genus = 0;
  int punctures_inside = 0;
  std::vector<CrossingId> crossings_inside;
  bool is_disk = false;

  void finish() { is_disk = euler == 1 && genus == 0 && punctures_inside == 0; }
};

struct CutClassification {
  SideClassification side_a, side_b;  // the two copies of the circle; equal piece when non-separating
  bool separating = false;
};

namespace cutdetail {

struct UnionFind {
  std::vector<int> parent;
  int make() {
    parent.push_back((int)parent.size());
    return (int)parent.size() - 1;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct PieceStats {
  int verts = 0, edges = 0, faces = 0;
  int boundary_circles = 0;
  int base_punctures = 0;  // punctures of regions the circle does not traverse
  std::vector<CrossingId> crossings;

  int euler() const { return verts - edges + faces; }
};

struct TraversedRegion {
  RegionId region = -1;
  int n_subfaces = 1;
  std::vector<int> subface_piece;   // sub-face id -> piece index (0/1)
  std::vector<int> puncture_indices;  // punctures located in this region
};

struct CutComputation {
  bool separating = false;
  PieceStats piece[2];  // piece[0] holds arc 0's from-side copy of the circle
  std::vector<TraversedRegion> traversed;

  const TraversedRegion* find_region(RegionId r) const {
    for (const auto& t : traversed)
      if (t.region == r) return &t;
    return nullptr;
  }
};

struct Mark {
  int item;   // track position: dart d at 2*dart_pos, corner k at 2*corner_pos+1
  int sub;    // order among marks sharing an item
  int chord;
  int end;    // 0 = chord's from endpoint, 1 = to
};

// The per-call cut complex builder.
class Cutter {
 public:
  Cutter(const Diagram& d, const RegionMap& rm, const CutCircle& c) : d_(d), rm_(rm), c_(c) {}

  CutComputation run() {
    collect_circle();
    split_regions();
    build_cells();
    assemble();
    return std::move(out_);
  }

 private:
  struct RegionWork {
    RegionId region = -1;
    std::vector<Mark> marks;            // sorted along the track
    std::vector<int> subface_after;     // per mark: sub-face of the interval after it
    int n_subfaces = 1;
    std::vector<int> subface_cell;      // sub-face id -> cell
    // per track item: sub-faces of its portions (size = marks on item + 1);
    // only dart items are consulted
    std::map<int, std::vector<int>> item_portions;
  };

  const Diagram& d_;
  const RegionMap& rm_;
  const CutCircle& c_;
  CutComputation out_;

  // circle structure
  struct CutPoint {
    EdgeId edge;
    int index_on_edge;  // canonical order along the edge's smaller dart
  };
  std::vector<CutPoint> cuts_;                 // EdgePair: 2 entries
  std::vector<int> cuts_on_edge_count_;        // per edge
  struct ChordSpec { RegionId region; };       // chords indexed like arcs
  int n_chords_ = 0;
  RegionId chord_region_[2] = {-1, -1};
  std::vector<RegionWork> work_;

  // cells
  UnionFind uf_;
  std::vector<int> vert_cell_;       // per crossing; -1 when split
  std::vector<int> edge_cell_;       // per edge; -1 when cut
  std::vector<int> face_cell_;       // per region; -1 when traversed
  int crossing_copy_[2] = {-1, -1};  // CrossingLoop copies
  std::vector<std::vector<int>> seg_cells_;        // per cut edge slot
  std::vector<std::array<int, 2>> cut_copies_;     // per cut point: before/after copies
  int chord_side_cell_[2][2] = {{-1, -1}, {-1, -1}};  // [chord][0=after-from,1=after-to]
  int seed_left_ = -1, seed_right_ = -1;

  RegionWork& work_for(RegionId r) {
    for (auto& w : work_)
      if (w.region == r) return w;
    work_.push_back(RegionWork{});
    work_.back().region = r;
    return work_.back();
  }

  [[noreturn]] void malformed(const std::string& why) {
    throw std::invalid_argument("malformed cut circle: " + why);
  }

  void add_mark(RegionId r, int item, int sub, int chord, int end) {
    work_for(r).marks.push_back({item, sub, chord, end});
  }

  int mark_sub_for_cut(DartId seen_from, int cut_index, int n_cuts_on_edge) const {
    DartId d0 = std::min(seen_from, d_.alpha[seen_from]);
    return seen_from == d0 ? cut_index : (n_cuts_on_edge - 1 - cut_index);
  }

  void collect_circle() {
    cuts_on_edge_count_.assign(d_.n_edges(), 0);
    if (c_.kind == CutKind::EdgePair) {
      if (c_.edge_a < 0 || c_.edge_a >= d_.n_edges() || c_.edge_b < 0 || c_.edge_b >= d_.n_edges())
        malformed("edge id out of range");
      if (d_.edge_of_dart[c_.bank_a] != c_.edge_a || d_.edge_of_dart[c_.bank_b] != c_.edge_b)
        malformed("bank dart not on its edge");
      RegionId r0 = rm_.dart_region[c_.bank_a];
      RegionId r0b = rm_.dart_region[c_.bank_b];
      RegionId r1 = rm_.dart_region[d_.alpha[c_.bank_a]];
      RegionId r1b = rm_.dart_region[d_.alpha[c_.bank_b]];
      if (r0 != r0b || r1 != r1b) malformed("arc endpoints lie in different regions");
      n_chords_ = 2;
      chord_region_[0] = r0;
      chord_region_[1] = r1;

      if (c_.edge_a == c_.edge_b) {
        cuts_.push_back({c_.edge_a, 0});
        cuts_.push_back({c_.edge_b, 1});
        cuts_on_edge_count_[c_.edge_a] = 2;
      } else {
        cuts_.push_back({c_.edge_a, 0});
        cuts_.push_back({c_.edge_b, 0});
        cuts_on_edge_count_[c_.edge_a] = 1;
        cuts_on_edge_count_[c_.edge_b] = 1;
      }
      // chord 0: from cut 0 on bank_a to cut 1 on bank_b;
      // chord 1: from cut 1 on alpha(bank_b) back to cut 0 on alpha(bank_a)
      auto mark_at = [&](int cut, DartId side, int chord, int end) {
        int sub = mark_sub_for_cut(side, cuts_[cut].index_on_edge, cuts_on_edge_count_[cuts_[cut].edge]);
        add_mark(rm_.dart_region[side], 2 * rm_.dart_pos[side], sub, chord, end);
      };
      mark_at(0, c_.bank_a, 0, 0);
      mark_at(1, c_.bank_b, 0, 1);
      mark_at(1, d_.alpha[c_.bank_b], 1, 0);
      mark_at(0, d_.alpha[c_.bank_a], 1, 1);
    } else {
      if (c_.crossing < 0 || c_.crossing >= d_.n_crossings) malformed("crossing out of range");
      CornerId entry = make_corner(c_.crossing, c_.corner_axis & 3);
      CornerId exit = make_corner(c_.crossing, (c_.corner_axis + 2) & 3);
      RegionId r = rm_.corner_region[entry];
      if (rm_.corner_region[exit] != r) malformed("opposite corners lie in different regions");
      n_chords_ = 1;
      chord_region_[0] = r;
      add_mark(r, 2 * rm_.corner_pos[exit] + 1, 0, 0, 0);
      add_mark(r, 2 * rm_.corner_pos[entry] + 1, 0, 0, 1);
    }
  }

  void split_regions() {
    for (auto& w : work_) {
      std::sort(w.marks.begin(), w.marks.end(), [](const Mark& a, const Mark& b) {
        return a.item != b.item ? a.item < b.item : a.sub < b.sub;
      });
      // parenthesis pass: chords of a disk are laminar, nesting from any basepoint
      std::vector<int> stack;
      int seen[2] = {0, 0};
      int inside[2] = {0, 0}, outside[2] = {0, 0};
      int cur = 0;
      w.subface_after.resize(w.marks.size());
      for (size_t k = 0; k < w.marks.size(); ++k) {
        int x = w.marks[k].chord;
        if (!seen[x]) {
          seen[x] = 1;
          outside[x] = cur;
          inside[x] = w.n_subfaces++;
          stack.push_back(x);
          cur = inside[x];
        } else {
          if (stack.empty() || stack.back() != x) malformed("chords interleave inside a region");
          stack.pop_back();
          cur = outside[x];
        }
        w.subface_after[k] = cur;
      }
      if (!stack.empty() || cur != 0) malformed("arcs do not close up");
      // sweep the track, recording the active sub-face for each item portion
      size_t k = 0;
      int active = 0;
      const Region& reg = rm_.regions[w.region];
      for (int item = 0; item < 2 * reg.size(); ++item) {
        std::vector<int> portions{active};
        while (k < w.marks.size() && w.marks[k].item == item) {
          active = w.subface_after[k];
          portions.push_back(active);
          ++k;
        }
        if ((item & 1) == 0 || portions.size() > 1) w.item_portions[item] = std::move(portions);
      }
    }
  }

  bool crossing_split(CrossingId c) const {
    return c_.kind == CutKind::CrossingLoop && c == c_.crossing;
  }

  int vert_cell_for_dart(DartId x) {
    CrossingId c = dart_crossing(x);
    if (!crossing_split(c)) return vert_cell_[c];
    int rel = (dart_slot(x) - c_.corner_axis) & 3;
    return rel == 1 || rel == 2 ? crossing_copy_[0] : crossing_copy_[1];
  }

  int side_cell_for_dart_portion(DartId x, int portion) {
    RegionId r = rm_.dart_region[x];
    if (face_cell_[r] >= 0) return face_cell_[r];
    RegionWork& w = work_for(r);
    const auto& portions = w.item_portions.at(2 * rm_.dart_pos[x]);
    return w.subface_cell[portions[portion]];
  }

  void build_cells() {
    vert_cell_.assign(d_.n_crossings, -1);
    for (CrossingId c = 0; c < d_.n_crossings; ++c)
      if (!crossing_split(c)) vert_cell_[c] = uf_.make();
    if (c_.kind == CutKind::CrossingLoop) {
      crossing_copy_[0] = uf_.make();
      crossing_copy_[1] = uf_.make();
    }
    edge_cell_.assign(d_.n_edges(), -1);
    for (EdgeId e = 0; e < d_.n_edges(); ++e)
      if (cuts_on_edge_count_[e] == 0) edge_cell_[e] = uf_.make();
    seg_cells_.assign(d_.n_edges(), {});
    for (EdgeId e = 0; e < d_.n_edges(); ++e)
      for (int i = 0; i <= cuts_on_edge_count_[e]; ++i)
        if (cuts_on_edge_count_[e] > 0) seg_cells_[e].push_back(uf_.make());
    cut_copies_.resize(cuts_.size());
    for (size_t i = 0; i < cuts_.size(); ++i) cut_copies_[i] = {uf_.make(), uf_.make()};
    face_cell_.assign(rm_.n_regions(), -1);
    for (RegionId r = 0; r < rm_.n_regions(); ++r) {
      bool traversed = false;
      for (const auto& w : work_) traversed |= (w.region == r);
      if (!traversed) face_cell_[r] = uf_.make();
    }
    for (auto& w : work_) {
      w.subface_cell.resize(w.n_subfaces);
      for (int s = 0; s < w.n_subfaces; ++s) w.subface_cell[s] = uf_.make();
    }
    for (int x = 0; x < n_chords_; ++x) {
      chord_side_cell_[x][0] = uf_.make();
      chord_side_cell_[x][1] = uf_.make();
    }
  }

  void assemble() {
    // whole edges: glue to endpoint vertices and to the face/sub-face on each side
    for (EdgeId e = 0; e < d_.n_edges(); ++e) {
      if (cuts_on_edge_count_[e] > 0) continue;
      auto [a, b] = d_.edge_darts[e];
      for (DartId x : {a, b}) {
        uf_.unite(edge_cell_[e], vert_cell_for_dart(x));
        uf_.unite(edge_cell_[e], side_cell_for_dart_portion(x, 0));
      }
    }
    // cut edges: segments glue along the edge and into the split regions
    for (EdgeId e = 0; e < d_.n_edges(); ++e) {
      int k = cuts_on_edge_count_[e];
      if (k == 0) continue;
      auto [a, b] = d_.edge_darts[e];  // a = canonical direction of segment order
      uf_.unite(seg_cells_[e][0], vert_cell_for_dart(a));
      uf_.unite(seg_cells_[e][k], vert_cell_for_dart(b));
      for (size_t ci = 0; ci < cuts_.size(); ++ci) {
        if (cuts_[ci].edge != e) continue;
        int i = cuts_[ci].index_on_edge;
        uf_.unite(cut_copies_[ci][0], seg_cells_[e][i]);
        uf_.unite(cut_copies_[ci][1], seg_cells_[e][i + 1]);
      }
      for (int i = 0; i <= k; ++i) {
        uf_.unite(seg_cells_[e][i], side_cell_for_dart_portion(a, i));
        uf_.unite(seg_cells_[e][i], side_cell_for_dart_portion(b, k - i));
      }
    }
    // chord sides bound their sub-faces
    for (auto& w : work_) {
      for (size_t kk = 0; kk < w.marks.size(); ++kk) {
        const Mark& m = w.marks[kk];
        uf_.unite(chord_side_cell_[m.chord][m.end], w.subface_cell[w.subface_after[kk]]);
        if (m.chord == 0 && m.end == 0) seed_left_ = w.subface_cell[w.subface_after[kk]];
        if (m.chord == 0 && m.end == 1) seed_right_ = w.subface_cell[w.subface_after[kk]];
      }
    }

    // piece resolution
    int root_left = uf_.find(seed_left_);
    int root_right = uf_.find(seed_right_);
    out_.separating = root_left != root_right;
    auto piece_of = [&](int cell) -> int {
      int r = uf_.find(cell);
      if (r == root_left) return 0;
      if (r == root_right) return 1;
      throw std::logic_error("cut produced more than two pieces; diagram must be connected");
    };

    out_.piece[0].boundary_circles = 1;
    if (out_.separating)
      out_.piece[1].boundary_circles = 1;
    else
      out_.piece[0].boundary_circles = 2;

    auto side_of = [&](int cell) {
      int p = piece_of(cell);  // always resolve: guards against stray pieces
      return out_.separating ? p : 0;
    };
    auto bump = [&](int cell, int what /*0=V,1=E,2=F*/) {
      PieceStats& p = out_.piece[side_of(cell)];
      if (what == 0) ++p.verts;
      else if (what == 1) ++p.edges;
      else ++p.faces;
    };
    for (CrossingId c = 0; c < d_.n_crossings; ++c)
      if (vert_cell_[c] >= 0) {
        bump(vert_cell_[c], 0);
        out_.piece[side_of(vert_cell_[c])].crossings.push_back(c);
      }
    for (int cc : {crossing_copy_[0], crossing_copy_[1]})
      if (cc >= 0) bump(cc, 0);
    for (const auto& cp : cut_copies_) {
      bump(cp[0], 0);
      bump(cp[1], 0);
    }
    for (EdgeId e = 0; e < d_.n_edges(); ++e) {
      if (edge_cell_[e] >= 0) bump(edge_cell_[e], 1);
      for (int s : seg_cells_[e]) bump(s, 1);
    }
    for (int x = 0; x < n_chords_; ++x) {
      bump(chord_side_cell_[x][0], 1);
      bump(chord_side_cell_[x][1], 1);
    }
    std::vector<int> region_piece(rm_.n_regions(), -1);
    for (RegionId r = 0; r < rm_.n_regions(); ++r)
      if (face_cell_[r] >= 0) {
        bump(face_cell_[r], 2);
        region_piece[r] = side_of(face_cell_[r]);
      }
    for (auto& w : work_) {
      TraversedRegion tr;
      tr.region = w.region;
      tr.n_subfaces = w.n_subfaces;
      for (int s = 0; s < w.n_subfaces; ++s) {
        bump(w.subface_cell[s], 2);
        tr.subface_piece.push_back(side_of(w.subface_cell[s]));
      }
      out_.traversed.push_back(std::move(tr));
    }

    for (int i = 0; i < (int)d_.punctures.size(); ++i) {
      CornerId k = make_corner(d_.punctures[i].crossing, d_.punctures[i].corner);
      RegionId r = rm_.corner_region[k];
      if (region_piece[r] >= 0)
        out_.piece[region_piece[r]].base_punctures += 1;
      else
        for (auto& tr : out_.traversed)
          if (tr.region == r) tr.puncture_indices.push_back(i);
    }
    if (!out_.separating) out_.piece[1] = out_.piece[0];
  }
};

inline CutComputation compute_cut(const Diagram& d, const RegionMap& rm, const CutCircle& c) {
  return Cutter(d, rm, c).run();
}

inline void finish_side(SideClassification& s, const PieceStats& p) {
  s.euler = p.euler();
  int twice_genus = 2 - p.boundary_circles - s.euler;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    throw std::logic_error("cut piece has inconsistent Euler characteristic");
  s.genus = twice_genus / 2;
  s.crossings_inside = p.crossings;
  std::sort(s.crossings_inside.begin(), s.crossings_inside.end());
  s.finish();
}

}  // namespace cutdetail

/// Split the surface along the circle and classify both sides.  The circle's
/// puncture routing must cover exactly the punctures of traversed regions.
inline CutClassification cut_and_classify(const Diagram& d, const RegionMap& rm,
                                          const CutCircle& c) {
  cutdetail::CutComputation comp = cutdetail::compute_cut(d, rm, c);

  std::vector<int> routed(d.punctures.size(), -1);
  for (auto [pi, sf] : c.puncture_subface) {
    if (pi < 0 || pi >= (int)d.punctures.size())
      throw std::invalid_argument("puncture index out of range in routing");
    CornerId k = make_corner(d.punctures[pi].crossing, d.punctures[pi].corner);
    const cutdetail::TraversedRegion* tr = comp.find_region(rm.corner_region[k]);
    if (!tr) throw std::invalid_argument("routing names a puncture outside the traversed regions");
    if (sf < 0 || sf >= tr->n_subfaces) throw std::invalid_argument("sub-face id out of range");
    if (routed[pi] >= 0) throw std::invalid_argument("duplicate puncture routing entry");
    routed[pi] = tr->subface_piece[sf];
  }
  int extra[2] = {0, 0};
  for (int i = 0; i < (int)d.punctures.size(); ++i) {
    CornerId k = make_corner(d.punctures[i].crossing, d.punctures[i].corner);
    if (comp.find_region(rm.corner_region[k])) {
      if (routed[i] < 0)
        throw std::invalid_argument("puncture in a traversed region lacks a routing entry");
      extra[routed[i]] += 1;
    }
  }

  CutClassification out;
  out.separating = comp.separating;
  cutdetail::finish_side(out.side_a, comp.piece[0]);
  cutdetail::finish_side(out.side_b, comp.piece[1]);
  if (comp.separating) {
    out.side_a.punctures_inside = comp.piece[0].base_punctures + extra[0];
    out.side_b.punctures_inside = comp.piece[1].base_punctures + extra[1];
  } else {
    out.side_a.punctures_inside = out.side_b.punctures_inside =
        comp.piece[0].base_punctures + extra[0] + extra[1];
  }
  out.side_a.finish();
  out.side_b.finish();
  return out;
}

struct TwoCutWitness {
  CutCircle circle;              // with the puncture routing that exposes the disk side
  SideClassification disk_side;  // is_disk and at least one crossing inside
  SideClassification other_side;
};

struct ReducednessFailure {
  CrossingId crossing = -1;
  CutCircle circle;
  SideClassification disk_side;
};

namespace cutdetail {

// Extremal-routing analysis of one candidate circle: can piece S be a disk
// once every traversed puncture is pushed to the other piece?
struct SideAnalysis {
  bool can_be_disk = false;
  int crossings = 0;
  bool escape_possible = true;
};

inline SideAnalysis analyze_side(const CutComputation& comp, int S) {
  SideAnalysis a;
  a.crossings = (int)comp.piece[S].crossings.size();
  if (comp.piece[S].euler() != 1 || comp.piece[S].base_punctures != 0) return a;
  for (const auto& tr : comp.traversed) {
    if (tr.puncture_indices.empty()) continue;
    bool escape = false;
    for (int sf = 0; sf < tr.n_subfaces; ++sf)
      if (comp.separating && tr.subface_piece[sf] != S) escape = true;
    if (!escape) {
      a.escape_possible = false;
      return a;
    }
  }
  a.can_be_disk = true;
  return a;
}

/// Fill the circle's routing so that every traversed puncture avoids piece S,
/// then reclassify.
inline CutClassification route_and_classify(const Diagram& d, const RegionMap& rm, CutCircle& c,
                                            const CutComputation& comp, int S) {
  c.puncture_subface.clear();
  for (const auto& tr : comp.traversed) {
    int target = -1;
    for (int sf = 0; sf < tr.n_subfaces; ++sf)
      if (!comp.separating || tr.subface_piece[sf] != S) {
        target = sf;
        break;
      }
    for (int pi : tr.puncture_indices) c.puncture_subface.emplace_back(pi, target);
  }
  std::sort(c.puncture_subface.begin(), c.puncture_subface.end());
  return cut_and_classify(d, rm, c);
}

inline int traversed_puncture_total(const CutComputation& comp) {
  int n = 0;
  for (const auto& tr : comp.traversed) n += (int)tr.puncture_indices.size();
  return n;
}

}  // namespace cutdetail

/// Reducedness: no circle bounding a disk meets the projection in exactly one
/// double point.  Candidates are crossings whose opposite corners share a
/// region; the first candidate exposing a disk side is the failure.
inline std::optional<ReducednessFailure> check_reduced(const Diagram& d, const RegionMap& rm) {
  for (CrossingId c = 0; c < d.n_crossings; ++c) {
    for (int axis = 0; axis < 2; ++axis) {
      if (rm.corner_region[make_corner(c, axis)] != rm.corner_region[make_corner(c, axis + 2)])
        continue;
      CutCircle circle;
      circle.kind = CutKind::CrossingLoop;
      circle.crossing = c;
      circle.corner_axis = axis;
      cutdetail::CutComputation comp = cutdetail::compute_cut(d, rm, circle);
      for (int S = 0; S < 2; ++S) {
        if (!cutdetail::analyze_side(comp, S).can_be_disk) continue;
        CutClassification cl = cutdetail::route_and_classify(d, rm, circle, comp, S);
        const SideClassification& disk = S == 0 ? cl.side_a : cl.side_b;
        return ReducednessFailure{c, circle, disk};
      }
    }
  }
  return std::nullopt;
}

/// Weak primeness: no disk whose boundary meets the projection in exactly two
/// interior edge points contains a crossing.  A candidate fails when a disk
/// side holds a crossing and the opposite side is not a crossing-free disk
/// (the exception keeps circles that merely cut off an arc of an edge from
/// condemning closed spherical diagrams).
inline std::optional<TwoCutWitness> check_weakly_prime(const Diagram& d, const RegionMap& rm) {
  // group edges by the ordered pair of side regions for pair enumeration
  std::map<std::pair<RegionId, RegionId>, std::vector<EdgeId>> by_sides;
  for (EdgeId e = 0; e < d.n_edges(); ++e) by_sides[rm.edge_sides[e]].push_back(e);

  auto try_candidate = [&](EdgeId e1, EdgeId e2, DartId bank_a,
                           DartId bank_b) -> std::optional<TwoCutWitness> {
    CutCircle circle;
    circle.kind = CutKind::EdgePair;
    circle.edge_a = e1;
    circle.edge_b = e2;
    circle.bank_a = bank_a;
    circle.bank_b = bank_b;
    cutdetail::CutComputation comp;
    try {
      comp = cutdetail::compute_cut(d, rm, circle);
    } catch (const std::invalid_argument&) {
      return std::nullopt;  // interleaved chords: no embedded circle has this pattern
    }
    int trav_punct = cutdetail::traversed_puncture_total(comp);
    for (int S = 0; S < 2; ++S) {
      cutdetail::SideAnalysis a = cutdetail::analyze_side(comp, S);
      if (!a.can_be_disk || a.crossings < 1) continue;
      const cutdetail::PieceStats& other = comp.piece[1 - S];
      bool other_trivial_disk = comp.separating && other.euler() == 1 &&
                                other.crossings.empty() && other.base_punctures == 0 &&
                                trav_punct == 0;
      if (other_trivial_disk) continue;
      CutClassification cl = cutdetail::route_and_classify(d, rm, circle, comp, S);
      TwoCutWitness w;
      w.circle = circle;
      w.disk_side = S == 0 ? cl.side_a : cl.side_b;
      w.other_side = S == 0 ? cl.side_b : cl.side_a;
      return w;
    }
    return std::nullopt;
  };

  for (EdgeId e1 = 0; e1 < d.n_edges(); ++e1) {
    DartId d1 = d.edge_darts[e1].first;
    RegionId ra = rm.dart_region[d1];
    RegionId rb = rm.dart_region[d.alpha[d1]];

    // the same edge crossed twice.  Only the side-preserving pairing exists:
    // swapping sides at the two cuts forces the region's two chords to
    // interleave, so no embedded circle realizes it.
    if (auto w = try_candidate(e1, e1, d1, d1)) return w;

    std::vector<EdgeId> others;
    auto gather = [&](std::pair<RegionId, RegionId> key) {
      auto it = by_sides.find(key);
      if (it == by_sides.end()) return;
      for (EdgeId e2 : it->second)
        if (e2 > e1) others.push_back(e2);
    };
    gather({ra, rb});
    if (ra != rb) gather({rb, ra});
    std::sort(others.begin(), others.end());
    others.erase(std::unique(others.begin(), others.end()), others.end());

    for (EdgeId e2 : others) {
      for (DartId bank_b : {d.edge_darts[e2].first, d.edge_darts[e2].second}) {
        if (rm.dart_region[bank_b] != ra || rm.dart_region[d.alpha[bank_b]] != rb) continue;
        if (auto w = try_candidate(e1, e2, d1, bank_b)) return w;
        if (ra != rb) break;  // the second bank cannot match a second time
      }
    }
  }
  return std::nullopt;
}

}  // namespace skd
