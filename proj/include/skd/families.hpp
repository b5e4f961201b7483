#pragma once

// Diagram generators used by the CLI and the test corpus.
//
// Slot conventions per crossing (counterclockwise): 0 = SE, 1 = NE, 2 = NW,
// 3 = SW for the horizontal twist chain; for torus grids slot 0 points east
// along the horizontal loop and slot 1 north along the vertical loop.

#include "skd/diagram.hpp"

namespace skd {

/// Closed alternating 2-braid chain with k crossings on the sphere: k bigons
/// between consecutive crossings plus two k-gon faces.  twist(3) is the
/// standard trefoil diagram, twist(2) the two-component clasp.
inline Diagram twist_chain(int k) {
  if (k < 1) throw std::invalid_argument("twist chain needs at least one crossing");
  Diagram d;
  d.n_crossings = k;
  d.alpha.assign(4 * k, -1);
  d.over_axis.assign(k, 0);
  auto link = [&](DartId a, DartId b) { d.alpha[a] = b; d.alpha[b] = a; };
  for (int i = 0; i < k; ++i) {
    int j = (i + 1) % k;
    link(make_dart(i, 1), make_dart(j, 2));  // upper strand
    link(make_dart(i, 0), make_dart(j, 3));  // lower strand
  }
  d.finalize();
  return d;
}

/// Alternating (p x q) grid on the torus: p horizontal and q vertical loops,
/// one crossing per pair.  Cyclic alternation along every loop forces p and q
/// to be even.
inline Diagram torus_grid(int p, int q) {
  if (p < 2 || q < 2 || p % 2 || q % 2)
    throw std::invalid_argument("torus grid needs even p, q >= 2 to be alternating");
  Diagram d;
  d.n_crossings = p * q;
  d.alpha.assign(4 * p * q, -1);
  d.over_axis.assign(p * q, 0);
  auto id = [&](int i, int j) { return i * q + j; };
  auto link = [&](DartId a, DartId b) { d.alpha[a] = b; d.alpha[b] = a; };
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      link(make_dart(id(i, j), 0), make_dart(id(i, (j + 1) % q), 2));  // east
      link(make_dart(id(i, j), 1), make_dart(id((i + 1) % p, j), 3));  // north
      d.over_axis[id(i, j)] = (i + j) % 2;  // horizontal strand over on even parity
    }
  d.finalize();
  return d;
}

/// The one-crossing two-loop diagram on the torus, with its single region
/// staked.  Each edge is a loop through the crossing, so the single
/// complementary region touches all four corners.
inline Diagram torus_curl() {
  Diagram d;
  d.n_crossings = 1;
  d.alpha = {2, 3, 0, 1};  // (0,0)-(0,2) and (0,1)-(0,3)
  d.over_axis = {0};
  d.punctures = {{0, 0}};
  d.finalize();
  return d;
}

/// Diagrammatic connected sum: splice edge e1 of a with edge e2 of b, joining
/// over-ends to under-ends so the result stays alternating.  The crossings of
/// b are relabeled after a's.
inline Diagram connected_sum(const Diagram& a, EdgeId e1, const Diagram& b, EdgeId e2) {
  if (e1 < 0 || e1 >= a.n_edges() || e2 < 0 || e2 >= b.n_edges())
    throw std::invalid_argument("edge id out of range");
  Diagram d;
  d.n_crossings = a.n_crossings + b.n_crossings;
  d.alpha.assign(4 * d.n_crossings, -1);
  int off = 4 * a.n_crossings;
  for (DartId x = 0; x < a.n_darts(); ++x) d.alpha[x] = a.alpha[x];
  for (DartId x = 0; x < b.n_darts(); ++x) d.alpha[off + x] = off + b.alpha[x];
  d.over_axis = a.over_axis;
  d.over_axis.insert(d.over_axis.end(), b.over_axis.begin(), b.over_axis.end());
  d.punctures = a.punctures;
  for (const auto& p : b.punctures) d.punctures.push_back({p.crossing + a.n_crossings, p.corner});

  auto [a1, a2] = a.edge_darts[e1];
  auto [b1, b2] = b.edge_darts[e2];
  DartId a_over = a.is_over(a1) ? a1 : a2;
  DartId a_under = a.is_over(a1) ? a2 : a1;
  DartId b_over = off + (b.is_over(b1) ? b1 : b2);
  DartId b_under = off + (b.is_over(b1) ? b2 : b1);
  d.alpha[a_over] = b_under;
  d.alpha[b_under] = a_over;
  d.alpha[a_under] = b_over;
  d.alpha[b_over] = a_under;
  d.finalize();
  return d;
}

/// Sum of two twist chains along their lowest-numbered edges; the standard
/// granny-style composite when both factors have three crossings.
inline Diagram twist_sum(int ka, int kb) {
  Diagram a = twist_chain(ka), b = twist_chain(kb);
  return connected_sum(a, 0, b, 0);
}

// --- fixed fixtures ---------------------------------------------------------

/// Standard trefoil: three bigons and two triangle faces.
inline Diagram trefoil() { return twist_chain(3); }

/// Two-crossing two-component clasp; all four faces are bigons.
inline Diagram clasp() { return twist_chain(2); }

/// Standard figure-eight diagram (closure of a four-crossing alternating
/// 3-braid): two bigons and four triangles.
inline Diagram figure_eight() {
  Diagram d;
  d.n_crossings = 4;
  d.alpha.assign(16, -1);
  auto link = [&](int c1, int s1, int c2, int s2) {
    d.alpha[make_dart(c1, s1)] = make_dart(c2, s2);
    d.alpha[make_dart(c2, s2)] = make_dart(c1, s1);
  };
  link(0, 2, 2, 3);
  link(0, 1, 1, 3);
  link(1, 2, 2, 0);
  link(1, 1, 3, 0);
  link(2, 2, 0, 3);
  link(2, 1, 3, 3);
  link(3, 2, 0, 0);
  link(3, 1, 1, 0);
  d.over_axis = {0, 1, 0, 1};
  d.finalize();
  return d;
}

/// Standard five-crossing twist knot: two vertical twist columns of three and
/// two crossings closed off pretzel-style.
inline Diagram twist_knot_52() {
  Diagram d;
  d.n_crossings = 5;
  d.alpha.assign(20, -1);
  auto link = [&](int c1, int s1, int c2, int s2) {
    d.alpha[make_dart(c1, s1)] = make_dart(c2, s2);
    d.alpha[make_dart(c2, s2)] = make_dart(c1, s1);
  };
  // column of three (crossings 0,1,2) and column of two (3,4)
  link(0, 2, 1, 3);
  link(0, 1, 1, 0);
  link(1, 2, 2, 3);
  link(1, 1, 2, 0);
  link(3, 2, 4, 3);
  link(3, 1, 4, 0);
  // tops and bottoms of the two columns
  link(2, 1, 4, 2);
  link(2, 2, 4, 1);
  link(0, 0, 3, 3);
  link(0, 3, 3, 0);
  d.over_axis = {0, 0, 0, 0, 0};
  d.finalize();
  return d;
}

/// Trefoil with a Reidemeister-I kink inserted on an upper edge: crossing 3
/// is nugatory.
inline Diagram kinked_trefoil() {
  Diagram t = twist_chain(3);
  Diagram d;
  d.n_crossings = 4;
  d.alpha.assign(16, -1);
  d.over_axis = {0, 0, 0, 0};
  auto link = [&](DartId x, DartId y) { d.alpha[x] = y; d.alpha[y] = x; };
  for (DartId x = 0; x < t.n_darts(); ++x) d.alpha[x] = t.alpha[x];
  // subdivide the edge (0,1)-(1,2) through the kink crossing 3
  link(make_dart(0, 1), make_dart(3, 0));
  link(make_dart(3, 2), make_dart(3, 1));  // the kink loop
  link(make_dart(3, 3), make_dart(1, 2));
  d.finalize();
  return d;
}

}  // namespace skd
