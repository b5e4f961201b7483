#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "skd/families.hpp"

using namespace skd;

namespace {

std::vector<RegionId> regions_of_size(const RegionMap& rm, int size) {
  std::vector<RegionId> out;
  for (const auto& r : rm.regions)
    if (r.size() == size) out.push_back(r.id);
  return out;
}

PunctureMark pole_in(const RegionMap& rm, RegionId r) {
  CornerId k = rm.regions[r].corners.front();
  return {corner_crossing(k), corner_index(k)};
}

Diagram staked_at(const Diagram& d, const std::vector<RegionId>& regions) {
  RegionMap rm = trace_regions(d);
  Diagram out = d;
  for (RegionId r : regions) out.punctures.push_back(pole_in(rm, r));
  return out;
}

}  // namespace

TEST_CASE("condition (ii): regions must be disks or annuli") {
  Diagram t = trefoil();
  RegionMap rm0 = trace_regions(t);
  auto bigons = regions_of_size(rm0, 2);
  auto kgons = regions_of_size(rm0, 3);

  CHECK_FALSE(check_condition_ii(trace_regions(staked_at(t, {bigons[0], bigons[1]}))).has_value());
  CHECK_FALSE(check_condition_ii(trace_regions(t)).has_value());  // no punctures: vacuous

  Diagram twice = t;
  twice.punctures = {pole_in(rm0, kgons[1]), pole_in(rm0, kgons[1])};
  auto fail = check_condition_ii(trace_regions(twice));
  REQUIRE(fail.has_value());
  CHECK(fail->region == kgons[1]);
}

TEST_CASE("condition (iii): adjacent annuli fail, self-adjacency included") {
  Diagram t = trefoil();
  RegionMap rm0 = trace_regions(t);
  auto bigons = regions_of_size(rm0, 2);
  auto kgons = regions_of_size(rm0, 3);

  // inner + outer never share an edge
  CHECK_FALSE(check_condition_iii(trace_regions(staked_at(t, {kgons[0], kgons[1]}))).has_value());

  // bigon + inner share edges
  auto fail = check_condition_iii(trace_regions(staked_at(t, {bigons[0], kgons[0]})));
  REQUIRE(fail.has_value());
  CHECK(fail->r1 == std::min(bigons[0], kgons[0]));
  CHECK(fail->r2 == std::max(bigons[0], kgons[0]));

  // torus curl: its single annulus is self-adjacent across both edges
  auto curl_fail = check_condition_iii(trace_regions(torus_curl()));
  REQUIRE(curl_fail.has_value());
  CHECK(curl_fail->r1 == 0);
  CHECK(curl_fail->r2 == 0);
  CHECK(curl_fail->edge == 0);  // smallest offending edge
}

TEST_CASE("passage graph on staked trefoils") {
  Diagram t = trefoil();
  RegionMap rm0 = trace_regions(t);
  auto bigons = regions_of_size(rm0, 2);
  auto kgons = regions_of_size(rm0, 3);

  SECTION("inner+outer: every crossing eligible on the bigon axis") {
    Diagram d = staked_at(t, {kgons[0], kgons[1]});
    RegionMap rm = trace_regions(d);
    PassageGraph g = build_passage_graph(d, rm);
    REQUIRE(g.passages.size() == 3);
    std::set<CrossingId> crossings;
    for (const auto& p : g.passages) {
      crossings.insert(p.crossing);
      auto opp = opposite_corner_regions(d, rm, p.crossing, p.axis);
      CHECK(rm.regions[opp.blocked[0]].cls == RegionClass::Annulus);
      CHECK(rm.regions[opp.blocked[1]].cls == RegionClass::Annulus);
      // the traversed corners lie in bigons
      CHECK(rm.regions[opp.traversed[0]].size() == 2);
      CHECK(rm.regions[opp.traversed[1]].size() == 2);
    }
    CHECK(crossings.size() == 3);
  }

  SECTION("two staked bigons: exactly one eligible passage") {
    Diagram d = staked_at(t, {bigons[0], bigons[1]});
    RegionMap rm = trace_regions(d);
    PassageGraph g = build_passage_graph(d, rm);
    REQUIRE(g.passages.size() == 1);
    auto opp = opposite_corner_regions(d, rm, g.passages[0].crossing, g.passages[0].axis);
    CHECK(((opp.blocked[0] == bigons[0] && opp.blocked[1] == bigons[1]) ||
           (opp.blocked[0] == bigons[1] && opp.blocked[1] == bigons[0])));
  }

  SECTION("no punctures: empty graph") {
    CHECK(build_passage_graph(t, rm0).passages.empty());
  }
}

TEST_CASE("condition (iv) on staked trefoils") {
  Diagram t = trefoil();
  RegionMap rm0 = trace_regions(t);
  auto bigons = regions_of_size(rm0, 2);
  auto kgons = regions_of_size(rm0, 3);

  SECTION("inner+outer fails with the three-passage bigon cycle") {
    Diagram d = staked_at(t, {kgons[0], kgons[1]});
    RegionMap rm = trace_regions(d);
    ConditionIvResult res = check_condition_iv(d, rm);
    REQUIRE(res.outcome == SearchOutcome::Fail);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->passages.size() == 3);
    CHECK(verify_curve_witness(d, rm, *res.witness));
    // the arcs run through the three bigons
    std::set<RegionId> arc_regions;
    for (const auto& a : res.witness->arcs) arc_regions.insert(a.region);
    CHECK(arc_regions == std::set<RegionId>(bigons.begin(), bigons.end()));
  }

  SECTION("two staked bigons pass: the lone passage cannot close") {
    Diagram d = staked_at(t, {bigons[0], bigons[1]});
    RegionMap rm = trace_regions(d);
    CHECK(check_condition_iv(d, rm).outcome == SearchOutcome::Pass);
  }

  SECTION("no punctures: vacuous pass via the empty graph") {
    ConditionIvResult res = check_condition_iv(t, rm0);
    CHECK(res.outcome == SearchOutcome::Pass);
    CHECK(res.filtered);
  }
}

TEST_CASE("verify_curve_witness rejects corrupted witnesses") {
  Diagram t = trefoil();
  RegionMap rm0 = trace_regions(t);
  auto kgons = regions_of_size(rm0, 3);
  Diagram d = staked_at(t, {kgons[0], kgons[1]});
  RegionMap rm = trace_regions(d);
  CurveWitness w = *check_condition_iv(d, rm).witness;
  REQUIRE(verify_curve_witness(d, rm, w));

  SECTION("flipping one passage's axis breaks eligibility") {
    CurveWitness bad = w;
    bad.passages[0].axis ^= 1;
    CHECK_FALSE(verify_curve_witness(d, rm, bad));
  }
  SECTION("repeating a crossing breaks simplicity") {
    CurveWitness bad = w;
    bad.passages[1] = bad.passages[0];
    CHECK_FALSE(verify_curve_witness(d, rm, bad));
  }
  SECTION("empty witness is rejected") {
    CurveWitness bad;
    CHECK_FALSE(verify_curve_witness(d, rm, bad));
  }
  SECTION("arc region mismatch is rejected") {
    CurveWitness bad = w;
    bad.arcs[0].region = (bad.arcs[0].region + 1) % rm.n_regions();
    CHECK_FALSE(verify_curve_witness(d, rm, bad));
  }
}

TEST_CASE("single-passage witnesses close through one region") {
  // on the torus curl both traversed corners share the single region, but the
  // region must be an annulus pair for eligibility: stake it and check
  Diagram c = torus_curl();
  RegionMap rm = trace_regions(c);
  PassageGraph g = build_passage_graph(c, rm);
  REQUIRE(g.passages.size() == 2);  // both axes eligible: blocked pair is the annulus twice
  ConditionIvResult res = check_condition_iv(c, rm);
  REQUIRE(res.outcome == SearchOutcome::Fail);
  CHECK(res.witness->passages.size() == 1);
  CHECK(verify_curve_witness(c, rm, *res.witness));
}

TEST_CASE("exact search agrees with naive enumeration over the corpus") {
  for (const auto& e : corpus::generator_corpus()) {
    if (e.diagram.n_crossings > 6) continue;  // acceptance runs the full corpus
    CAPTURE(e.name);
    corpus::for_each_staking(e.diagram, 3, [&](const Diagram& staked, const auto&) {
      RegionMap rm = trace_regions(staked);
      ConditionIvResult res = check_condition_iv(staked, rm);
      REQUIRE(res.outcome != SearchOutcome::Undecided);
      bool naive = oracle::naive_curve_exists(staked, rm);
      CHECK((res.outcome == SearchOutcome::Fail) == naive);
      if (res.witness) CHECK(verify_curve_witness(staked, rm, *res.witness));
      // filter soundness: when the filter settles a pass, the naive search
      // must find nothing either
      if (res.filtered) CHECK_FALSE(naive);
    });
  }
}

TEST_CASE("determinism: repeated searches return the identical witness") {
  Diagram t = trefoil();
  RegionMap rm0 = trace_regions(t);
  auto kgons = regions_of_size(rm0, 3);
  Diagram d = staked_at(t, {kgons[0], kgons[1]});
  RegionMap rm = trace_regions(d);
  auto r1 = check_condition_iv(d, rm);
  auto r2 = check_condition_iv(d, rm);
  REQUIRE(r1.witness.has_value());
  REQUIRE(r2.witness.has_value());
  CHECK(r1.witness->passages.size() == r2.witness->passages.size());
  for (size_t i = 0; i < r1.witness->passages.size(); ++i) {
    CHECK(r1.witness->passages[i] == r2.witness->passages[i]);
    CHECK(r1.witness->arcs[i].region == r2.witness->arcs[i].region);
    CHECK(r1.witness->arcs[i].from_corner == r2.witness->arcs[i].from_corner);
    CHECK(r1.witness->arcs[i].to_corner == r2.witness->arcs[i].to_corner);
  }
}

TEST_CASE("mirror invariance: conditions depend only on the projection") {
  for (const auto& e : corpus::generator_corpus()) {
    if (e.diagram.n_crossings > 5) continue;
    corpus::for_each_staking(e.diagram, 2, [&](const Diagram& staked, const auto&) {
      Diagram mirrored = flip_all_axes(staked);
      RegionMap rm = trace_regions(staked);
      RegionMap rmm = trace_regions(mirrored);
      CHECK(check_condition_ii(rm).has_value() == check_condition_ii(rmm).has_value());
      CHECK(check_condition_iii(rm).has_value() == check_condition_iii(rmm).has_value());
      CHECK(build_passage_graph(staked, rm).passages.size() ==
            build_passage_graph(mirrored, rmm).passages.size());
      CHECK(check_condition_iv(staked, rm).outcome == check_condition_iv(mirrored, rmm).outcome);
    });
  }
}

TEST_CASE("budget exhaustion reports undecided, never a wrong verdict") {
  Diagram t = trefoil();
  RegionMap rm0 = trace_regions(t);
  auto kgons = regions_of_size(rm0, 3);
  Diagram d = staked_at(t, {kgons[0], kgons[1]});
  RegionMap rm = trace_regions(d);
  ConditionIvResult res = check_condition_iv(d, rm, 1);  // starve the search
  CHECK(res.outcome == SearchOutcome::Undecided);
}

TEST_CASE("curve search oracle agreement on the named fixtures") {
  for (const Diagram& base : {figure_eight(), twist_knot_52(), kinked_trefoil()}) {
    corpus::for_each_staking(base, 3, [&](const Diagram& staked, const auto&) {
      RegionMap rm = trace_regions(staked);
      ConditionIvResult res = check_condition_iv(staked, rm);
      REQUIRE(res.outcome != SearchOutcome::Undecided);
      CHECK((res.outcome == SearchOutcome::Fail) == oracle::naive_curve_exists(staked, rm));
    });
  }
}
