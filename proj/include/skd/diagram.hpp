#pragma once

// Combinatorial diagrams of links projected to surfaces, encoded as rotation
// systems: each crossing carries four darts in counterclockwise slots 0..3,
// an involution pairs darts into edges, and the implied capped surface is
// always closed and orientable.  Over/under data is one axis bit per crossing
// (axis 0: the overstrand occupies slots {0,2}).  Puncture marks select face
// corners; puncturing those faces turns the capped surface into the actual
// projection surface with boundary.
//
// Also home of the SKD text format (parse/serialize) and the structural
// validation used as a precondition by every downstream check.

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skd {

using CrossingId = int;
using DartId = int;    // dart = 4*crossing + slot
using EdgeId = int;
using CornerId = int;  // corner = 4*crossing + j: the face corner between slots j and j+1 (mod 4)
using RegionId = int;

inline CrossingId dart_crossing(DartId d) { return d >> 2; }
inline int dart_slot(DartId d) { return d & 3; }
inline DartId make_dart(CrossingId c, int slot) { return 4 * c + slot; }

/// Next dart counterclockwise at the same crossing.
inline DartId rot(DartId d) { return (d & ~3) | ((d + 1) & 3); }
inline DartId rot_inv(DartId d) { return (d & ~3) | ((d + 3) & 3); }

/// The strand entering a crossing at slot j leaves at slot j+2.
inline DartId through_dart(DartId d) { return d ^ 2; }

inline CrossingId corner_crossing(CornerId k) { return k >> 2; }
inline int corner_index(CornerId k) { return k & 3; }
inline CornerId make_corner(CrossingId c, int j) { return 4 * c + j; }

struct PunctureMark {
  CrossingId crossing = 0;
  int corner = 0;  // in {0,1,2,3}

  friend bool operator==(const PunctureMark& a, const PunctureMark& b) {
    return a.crossing == b.crossing && a.corner == b.corner;
  }
};

/// Raised by the SKD parser; line/column are 1-based.
struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line_, int column_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ", col " +
                           std::to_string(column_) + ": " + what_),
        line(line_), column(column_) {}
};

struct Diagram {
  int n_crossings = 0;
  std::vector<DartId> alpha;      // edge involution over the 4n darts, fixed-point-free
  std::vector<int> over_axis;     // per crossing, in {0,1}
  std::vector<PunctureMark> punctures;

  // Derived edge tables, built by finalize(): edges are indexed in increasing
  // order of their smaller dart.
  std::vector<std::pair<DartId, DartId>> edge_darts;  // first < second
  std::vector<EdgeId> edge_of_dart;

  int n_darts() const { return 4 * n_crossings; }
  int n_edges() const { return 2 * n_crossings; }

  bool is_over(DartId d) const { return (dart_slot(d) & 1) == over_axis[dart_crossing(d)]; }

  void finalize() {
    const int nd = n_darts();
    if ((int)alpha.size() != nd) throw std::invalid_argument("alpha size mismatch");
    edge_darts.clear();
    edge_darts.reserve(nd / 2);
    edge_of_dart.assign(nd, -1);
    for (DartId d = 0; d < nd; ++d) {
      DartId m = alpha[d];
      if (m < 0 || m >= nd || m == d || alpha[m] != d)
        throw std::invalid_argument("alpha is not a fixed-point-free involution");
      if (d < m) {
        edge_of_dart[d] = edge_of_dart[m] = (EdgeId)edge_darts.size();
        edge_darts.emplace_back(d, m);
      }
    }
  }
};

struct ValidationReport {
  bool connected = false;
  bool alternating = false;
  bool has_crossing = false;
  bool surface_is_disk = false;
  int capped_genus = 0;
  int n_boundary = 0;  // number of punctures
  std::vector<std::string> messages;

  bool structurally_ok() const { return connected && alternating && has_crossing; }
};

/// Per-edge alternation: exactly one endpoint dart on its crossing's over-axis.
inline bool check_alternating(const Diagram& d) {
  for (const auto& [a, b] : d.edge_darts)
    if (d.is_over(a) == d.is_over(b)) return false;
  return true;
}

inline bool check_connected(const Diagram& d) {
  if (d.n_crossings == 0) return false;
  std::vector<char> seen(d.n_crossings, 0);
  std::vector<CrossingId> stack{0};
  seen[0] = 1;
  int found = 1;
  while (!stack.empty()) {
    CrossingId c = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      CrossingId c2 = dart_crossing(d.alpha[make_dart(c, s)]);
      if (!seen[c2]) {
        seen[c2] = 1;
        ++found;
        stack.push_back(c2);
      }
    }
  }
  return found == d.n_crossings;
}

/// Number of faces of the capped closed surface (orbits of rot∘alpha).
inline int count_faces(const Diagram& d) {
  const int nd = d.n_darts();
  std::vector<char> seen(nd, 0);
  int faces = 0;
  for (DartId start = 0; start < nd; ++start) {
    if (seen[start]) continue;
    ++faces;
    DartId cur = start;
    do {
      seen[cur] = 1;
      cur = rot(d.alpha[cur]);
    } while (cur != start);
  }
  return faces;
}

inline ValidationReport validate_structure(const Diagram& d) {
  ValidationReport r;
  r.has_crossing = d.n_crossings >= 1;
  r.connected = check_connected(d);
  r.alternating = check_alternating(d);
  r.n_boundary = (int)d.punctures.size();
  const int faces = count_faces(d);
  const int chi = d.n_crossings - 2 * d.n_crossings + faces;
  if (r.connected) {
    // V - E + F = 2 - 2g for a connected map on its capped surface.
    r.capped_genus = (2 - chi) / 2;
    if ((2 - chi) % 2 != 0 || r.capped_genus < 0)
      r.messages.push_back("Euler characteristic " + std::to_string(chi) +
                           " is not of the form 2-2g");
  } else {
    r.capped_genus = 0;
    r.messages.push_back("underlying 4-valent graph is not connected");
  }
  if (!r.alternating) r.messages.push_back("diagram is not alternating (some edge lacks exactly one over end)");
  r.surface_is_disk = r.connected && r.capped_genus == 0 && r.n_boundary == 1;
  return r;
}

/// 2g + (k - 1): the genus of the handlebody F x I for F of genus g with k
/// boundary circles.  k = 0 is rejected.
inline int handlebody_genus(int surface_genus, int n_boundary) {
  if (surface_genus < 0) throw std::invalid_argument("negative genus");
  if (n_boundary < 1)
    throw std::invalid_argument("thickened closed surface is not a handlebody (k must be >= 1)");
  return 2 * surface_genus + (n_boundary - 1);
}

struct LinkComponent {
  std::vector<DartId> departure_darts;     // forward traversal, one dart per edge traversed
  std::vector<CrossingId> crossing_visits; // crossing passed through at each step
};

/// Partition the strands into closed components.  The walk departs on a dart,
/// follows its edge, and continues through the far crossing at the opposite
/// slot.  Forward and reversed traversals of one component are distinct dart
/// orbits; they are paired up and the orbit holding the smallest dart is kept.
inline std::vector<LinkComponent> trace_link_components(const Diagram& d) {
  const int nd = d.n_darts();
  std::vector<int> orbit_of(nd, -1);
  std::vector<std::vector<DartId>> orbits;
  for (DartId start = 0; start < nd; ++start) {
    if (orbit_of[start] >= 0) continue;
    std::vector<DartId> orb;
    DartId cur = start;
    do {
      orbit_of[cur] = (int)orbits.size();
      orb.push_back(cur);
      cur = through_dart(d.alpha[cur]);
    } while (cur != start);
    orbits.push_back(std::move(orb));
  }
  std::vector<LinkComponent> comps;
  std::vector<char> used(orbits.size(), 0);
  for (size_t i = 0; i < orbits.size(); ++i) {
    if (used[i]) continue;
    int rev = orbit_of[d.alpha[orbits[i][0]]];  // reversed traversal uses the mate darts
    used[i] = used[rev] = 1;
    LinkComponent comp;
    comp.departure_darts = orbits[i];
    for (DartId dep : comp.departure_darts)
      comp.crossing_visits.push_back(dart_crossing(d.alpha[dep]));
    comps.push_back(std::move(comp));
  }
  return comps;
}

// ---------------------------------------------------------------------------
// Diagram transforms (used by invariance tests and the staking machinery).

/// Relabel crossings by `perm` (new index of old crossing c is perm[c]) and
/// rotate each crossing's slots by an even amount rot2[c] in {0,2}.
inline Diagram relabel_diagram(const Diagram& d, const std::vector<int>& perm,
                               const std::vector<int>& rot2) {
  Diagram out;
  out.n_crossings = d.n_crossings;
  out.alpha.assign(d.n_darts(), -1);
  out.over_axis.assign(d.n_crossings, 0);
  auto map_dart = [&](DartId x) {
    return make_dart(perm[dart_crossing(x)], (dart_slot(x) + rot2[dart_crossing(x)]) & 3);
  };
  for (DartId x = 0; x < d.n_darts(); ++x) out.alpha[map_dart(x)] = map_dart(d.alpha[x]);
  for (CrossingId c = 0; c < d.n_crossings; ++c) out.over_axis[perm[c]] = d.over_axis[c];
  for (const auto& p : d.punctures)
    out.punctures.push_back({perm[p.crossing], (p.corner + rot2[p.crossing]) & 3});
  out.finalize();
  return out;
}

/// Flip every crossing's over-axis (global mirror through the surface).
inline Diagram flip_all_axes(const Diagram& d) {
  Diagram out = d;
  for (auto& a : out.over_axis) a ^= 1;
  return out;
}

/// Reverse every rotation (orientation reversal of the surface): slot s maps
/// to (4-s) mod 4, the corner between slots j,j+1 maps to corner (3-j).
inline Diagram reflect_diagram(const Diagram& d) {
  Diagram out;
  out.n_crossings = d.n_crossings;
  out.alpha.assign(d.n_darts(), -1);
  out.over_axis = d.over_axis;  // axis {0,2} and {1,3} are both preserved
  auto map_dart = [&](DartId x) {
    return make_dart(dart_crossing(x), (4 - dart_slot(x)) & 3);
  };
  for (DartId x = 0; x < d.n_darts(); ++x) out.alpha[map_dart(x)] = map_dart(d.alpha[x]);
  for (const auto& p : d.punctures) out.punctures.push_back({p.crossing, (3 - p.corner) & 3});
  out.finalize();
  return out;
}

// ---------------------------------------------------------------------------
// SKD text format.
//
//   crossings N
//   edge (c1,s1) (c2,s2)      exactly 2N lines, each dart exactly once
//   over c A                  exactly N lines, A in {0,1}
//   puncture (c,j)            zero or more, j in {0,1,2,3}
//
// '#' starts a comment, whitespace within a line is free, indices 0-based.

namespace detail {

class LineScanner {
 public:
  LineScanner(const std::string& text, int line_no) : s_(text), line_(line_no) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  int column() const { return (int)pos_ + 1; }

  std::string word() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha((unsigned char)s_[pos_]) || s_[pos_] == '_' ||
                                s_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected a directive word");
    return s_.substr(start, pos_ - start);
  }

  long integer() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  void expect(char ch) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::pair<long, long> int_pair() {
    expect('(');
    long a = integer();
    expect(',');
    long b = integer();
    expect(')');
    return {a, b};
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, column(), msg); }

 private:
  const std::string& s_;
  size_t pos_ = 0;
  int line_;
};

}  // namespace detail

inline Diagram parse_diagram(const std::string& text) {
  Diagram d;
  bool saw_crossings = false;
  std::vector<char> over_seen;
  std::vector<int> dart_edge_line;  // parse line that referenced each dart, for diagnostics
  int n_edge_lines = 0;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string line = text.substr(pos, eol == std::string::npos ? std::string::npos : eol - pos);
    pos = eol == std::string::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);

    detail::LineScanner sc(line, line_no);
    if (sc.at_end()) continue;
    std::string dir = sc.word();

    if (dir == "crossings") {
      if (saw_crossings) sc.fail("duplicate 'crossings' line");
      long n = sc.integer();
      if (n < 1) sc.fail("crossing count must be positive");
      if (n > (1 << 28)) sc.fail("crossing count out of range");
      saw_crossings = true;
      d.n_crossings = (int)n;
      d.alpha.assign(d.n_darts(), -1);
      d.over_axis.assign(d.n_crossings, -1);
      over_seen.assign(d.n_crossings, 0);
      dart_edge_line.assign(d.n_darts(), 0);
    } else if (dir == "edge") {
      if (!saw_crossings) sc.fail("'edge' before 'crossings'");
      auto [c1, s1] = sc.int_pair();
      auto [c2, s2] = sc.int_pair();
      auto check = [&](long c, long s) {
        if (c < 0 || c >= d.n_crossings) sc.fail("crossing index out of range");
        if (s < 0 || s > 3) sc.fail("slot must be in 0..3");
      };
      check(c1, s1);
      check(c2, s2);
      DartId a = make_dart((int)c1, (int)s1), b = make_dart((int)c2, (int)s2);
      if (a == b) sc.fail("dart paired with itself");
      if (d.alpha[a] != -1)
        sc.fail("dart (" + std::to_string(c1) + "," + std::to_string(s1) +
                ") already used on line " + std::to_string(dart_edge_line[a]));
      if (d.alpha[b] != -1)
        sc.fail("dart (" + std::to_string(c2) + "," + std::to_string(s2) +
                ") already used on line " + std::to_string(dart_edge_line[b]));
      d.alpha[a] = b;
      d.alpha[b] = a;
      dart_edge_line[a] = dart_edge_line[b] = line_no;
      ++n_edge_lines;
    } else if (dir == "over") {
      if (!saw_crossings) sc.fail("'over' before 'crossings'");
      long c = sc.integer();
      if (c < 0 || c >= d.n_crossings) sc.fail("crossing index out of range");
      long a = sc.integer();
      if (a != 0 && a != 1) sc.fail("over axis must be 0 or 1");
      if (over_seen[c]) sc.fail("duplicate over-axis declaration for crossing " + std::to_string(c));
      over_seen[c] = 1;
      d.over_axis[c] = (int)a;
    } else if (dir == "puncture") {
      if (!saw_crossings) sc.fail("'puncture' before 'crossings'");
      auto [c, j] = sc.int_pair();
      if (c < 0 || c >= d.n_crossings) sc.fail("crossing index out of range");
      if (j < 0 || j > 3) sc.fail("corner must be in 0..3");
      d.punctures.push_back({(int)c, (int)j});
    } else {
      sc.fail("unknown directive '" + dir + "'");
    }
    if (!sc.at_end()) sc.fail("trailing characters");
  }

  if (!saw_crossings) throw ParseError(line_no, 1, "missing 'crossings' line");
  if (n_edge_lines != d.n_edges())
    throw ParseError(line_no, 1, "expected " + std::to_string(d.n_edges()) + " edge lines, got " +
                                     std::to_string(n_edge_lines));
  for (DartId x = 0; x < d.n_darts(); ++x)
    if (d.alpha[x] == -1)
      throw ParseError(line_no, 1, "dart (" + std::to_string(dart_crossing(x)) + "," +
                                       std::to_string(dart_slot(x)) + ") never referenced");
  for (CrossingId c = 0; c < d.n_crossings; ++c)
    if (!over_seen[c])
      throw ParseError(line_no, 1, "missing over-axis for crossing " + std::to_string(c));
  d.finalize();
  return d;
}

inline std::string serialize_diagram(const Diagram& d) {
  std::string out;
  out += "crossings " + std::to_string(d.n_crossings) + "\n";
  for (const auto& [a, b] : d.edge_darts)
    out += "edge (" + std::to_string(dart_crossing(a)) + "," + std::to_string(dart_slot(a)) +
           ") (" + std::to_string(dart_crossing(b)) + "," + std::to_string(dart_slot(b)) + ")\n";
  for (CrossingId c = 0; c < d.n_crossings; ++c)
    out += "over " + std::to_string(c) + " " + std::to_string(d.over_axis[c]) + "\n";
  for (const auto& p : d.punctures)
    out += "puncture (" + std::to_string(p.crossing) + "," + std::to_string(p.corner) + ")\n";
  return out;
}

inline bool same_structure(const Diagram& a, const Diagram& b) {
  return a.n_crossings == b.n_crossings && a.alpha == b.alpha && a.over_axis == b.over_axis &&
         a.punctures == b.punctures;
}

}  // namespace skd
