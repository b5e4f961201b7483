#pragma once

// Complementary regions of the projection, obtained by face tracing of the
// combinatorial map.  A face orbit follows next(d) = rot(alpha(d)); the face
// lies to the right of each traversed dart, and the corner passed between
// consecutive darts d, next(d) has the same (crossing, slot) coordinates as
// alpha(d).  Capped faces are disks by construction, so a region's topology
// is determined by how many punctures it received.

#include <array>
#include <optional>

#include "skd/diagram.hpp"

namespace skd {

enum class RegionClass { Disk, Annulus, Other };

inline const char* region_class_name(RegionClass c) {
  switch (c) {
    case RegionClass::Disk: return "DISK";
    case RegionClass::Annulus: return "ANNULUS";
    default: return "OTHER";
  }
}

struct Region {
  RegionId id = -1;
  std::vector<DartId> boundary_darts;   // face-tracing order; the region lies right of each
  std::vector<CornerId> corners;        // corners[t] sits between boundary_darts[t] and [t+1]
  std::vector<EdgeId> boundary_edges;   // multiset: one entry per boundary dart
  int punctures = 0;
  RegionClass cls = RegionClass::Disk;

  int size() const { return (int)boundary_darts.size(); }
};

struct RegionMap {
  std::vector<Region> regions;
  std::vector<RegionId> corner_region;  // total map corner -> region
  std::vector<int> corner_pos;          // corner -> index in its region's corner cycle
  std::vector<RegionId> dart_region;    // dart -> region traced along it
  std::vector<int> dart_pos;            // dart -> index in its region's boundary walk
  std::vector<std::pair<RegionId, RegionId>> edge_sides;  // per edge: (side of smaller dart, side of mate)

  int n_regions() const { return (int)regions.size(); }
};

inline RegionClass classify_region(int punctures) {
  if (punctures == 0) return RegionClass::Disk;
  if (punctures == 1) return RegionClass::Annulus;
  return RegionClass::Other;
}

inline RegionMap trace_regions(const Diagram& d) {
  RegionMap rm;
  const int nd = d.n_darts();
  rm.dart_region.assign(nd, -1);
  rm.dart_pos.assign(nd, -1);
  rm.corner_region.assign(nd, -1);
  rm.corner_pos.assign(nd, -1);

  for (DartId start = 0; start < nd; ++start) {
    if (rm.dart_region[start] >= 0) continue;
    Region reg;
    reg.id = (RegionId)rm.regions.size();
    DartId cur = start;
    do {
      rm.dart_region[cur] = reg.id;
      rm.dart_pos[cur] = reg.size();
      reg.boundary_darts.push_back(cur);
      reg.boundary_edges.push_back(d.edge_of_dart[cur]);
      CornerId corner = d.alpha[cur];  // corner between cur and the next dart
      rm.corner_region[corner] = reg.id;
      rm.corner_pos[corner] = (int)reg.corners.size();
      reg.corners.push_back(corner);
      cur = rot(d.alpha[cur]);
    } while (cur != start);
    rm.regions.push_back(std::move(reg));
  }

  for (const auto& p : d.punctures) {
    CornerId k = make_corner(p.crossing, p.corner);
    rm.regions[rm.corner_region[k]].punctures += 1;
  }
  for (auto& reg : rm.regions) reg.cls = classify_region(reg.punctures);

  rm.edge_sides.reserve(d.n_edges());
  for (const auto& [a, b] : d.edge_darts)
    rm.edge_sides.emplace_back(rm.dart_region[a], rm.dart_region[b]);
  return rm;
}

struct OppositeCornerRegions {
  std::array<RegionId, 2> traversed;  // regions at corners (c,axis), (c,axis+2)
  std::array<RegionId, 2> blocked;    // regions at the other opposite pair
};

/// Regions at the two opposite corner pairs of a crossing.  A curve bisecting
/// the crossing along `axis` passes through the traversed pair; the blocked
/// pair is the one it avoids.
inline OppositeCornerRegions opposite_corner_regions(const Diagram&, const RegionMap& rm,
                                                     CrossingId c, int axis) {
  OppositeCornerRegions out;
  out.traversed = {rm.corner_region[make_corner(c, axis)],
                   rm.corner_region[make_corner(c, axis + 2)]};
  out.blocked = {rm.corner_region[make_corner(c, (axis + 1) & 3)],
                 rm.corner_region[make_corner(c, (axis + 3) & 3)]};
  return out;
}

struct AdjacentRegionPair {
  RegionId r1, r2;  // normalized r1 <= r2; equal for a self-adjacent region
  EdgeId edge;
};

/// One entry per edge, pairing the regions on its two sides.
inline std::vector<AdjacentRegionPair> adjacent_region_pairs(const RegionMap& rm) {
  std::vector<AdjacentRegionPair> out;
  out.reserve(rm.edge_sides.size());
  for (EdgeId e = 0; e < (EdgeId)rm.edge_sides.size(); ++e) {
    auto [a, b] = rm.edge_sides[e];
    out.push_back({std::min(a, b), std::max(a, b), e});
  }
  return out;
}

/// True when the cyclic chords (a1,b1) and (a2,b2) on a cycle of length m
/// interleave (exactly one of a2,b2 lies strictly inside the arc a1->b1).
/// Endpoints are assumed pairwise distinct.
inline bool chords_interleave(int m, int a1, int b1, int a2, int b2) {
  auto inside = [&](int x) {
    int span = (b1 - a1 + m) % m;
    int off = (x - a1 + m) % m;
    return off > 0 && off < span;
  };
  return inside(a2) != inside(b2);
}

}  // namespace skd
