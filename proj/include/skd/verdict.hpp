#pragma once

// Full decision procedures.  The thickened-surface theorem requires a
// connected reduced alternating diagram with at least one crossing on a
// surface with boundary other than a disk, and decides tg-hyperbolicity by
// conditions (i)-(iv).  The ambient theorem trusts six user assertions about
// the ambient manifold and checks conditions (i) and (ii) only.
//
// All conditions are always evaluated (no short-circuit) so a report can list
// every independent failure; the budgeted condition (iv) runs last.

#include <chrono>
#include <functional>

#include "skd/conditions.hpp"
#include "skd/primeness.hpp"

namespace skd {

enum class Status { TgHyperbolic, NotTgHyperbolic, NotApplicable, Undecided };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::TgHyperbolic: return "TG_HYPERBOLIC";
    case Status::NotTgHyperbolic: return "NOT_TG_HYPERBOLIC";
    case Status::NotApplicable: return "NOT_APPLICABLE";
    default: return "UNDECIDED";
  }
}

enum class TheoremMode { Thickened, Ambient };

inline const char* theorem_name(TheoremMode m) {
  return m == TheoremMode::Thickened ? "THICKENED" : "AMBIENT";
}

struct AmbientAssertions {
  bool ambient_irreducible = false;
  bool ambient_boundary_irreducible = false;
  bool surface_incompressible = false;
  bool surface_boundary_incompressible = false;
  bool tori_meet_surface = false;
  bool annuli_meet_surface = false;

  bool all() const {
    return ambient_irreducible && ambient_boundary_irreducible && surface_incompressible &&
           surface_boundary_incompressible && tori_meet_surface && annuli_meet_surface;
  }
  static AmbientAssertions all_asserted() {
    return {true, true, true, true, true, true};
  }
};

struct Preconditions {
  bool connected = false;
  bool alternating = false;
  bool has_crossing = false;
  bool reduced = false;
  bool surface_not_disk = false;
  bool has_boundary = false;

  bool all() const {
    return connected && alternating && has_crossing && reduced && surface_not_disk && has_boundary;
  }
};

enum class CondState { Pass, Fail, Undecided, Skipped };

inline const char* cond_state_name(CondState s) {
  switch (s) {
    case CondState::Pass: return "PASS";
    case CondState::Fail: return "FAIL";
    case CondState::Undecided: return "UNDECIDED";
    default: return "SKIPPED";
  }
}

struct ConditionResults {
  CondState i = CondState::Skipped;
  CondState ii = CondState::Skipped;
  CondState iii = CondState::Skipped;
  CondState iv = CondState::Skipped;
  std::optional<TwoCutWitness> i_witness;
  std::optional<ConditionIIFailure> ii_witness;
  std::optional<ConditionIIIFailure> iii_witness;
  std::optional<CurveWitness> iv_witness;
};

struct ConditionTimings {
  double validate_ms = 0, reduced_ms = 0, i_ms = 0, ii_ms = 0, iii_ms = 0, iv_ms = 0;
};

struct Verdict {
  Status status = Status::NotApplicable;
  TheoremMode theorem = TheoremMode::Thickened;
  Preconditions preconditions;
  std::optional<ReducednessFailure> reduced_failure;
  ConditionResults conditions;
  ValidationReport validation;
  ConditionTimings timings;
  long long iv_nodes = 0;
};

namespace verdictdetail {

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

inline Status combine(const Preconditions& pre, const ConditionResults& c) {
  if (!pre.all()) return Status::NotApplicable;
  bool any_fail = c.i == CondState::Fail || c.ii == CondState::Fail || c.iii == CondState::Fail ||
                  c.iv == CondState::Fail;
  if (any_fail) return Status::NotTgHyperbolic;
  if (c.iv == CondState::Undecided) return Status::Undecided;
  return Status::TgHyperbolic;
}

}  // namespace verdictdetail

inline Verdict theorem_thickened_verdict(const Diagram& d,
                                         long long iv_budget = kDefaultCurveSearchBudget) {
  using clock = std::chrono::steady_clock;
  Verdict v;
  v.theorem = TheoremMode::Thickened;

  auto t0 = clock::now();
  v.validation = validate_structure(d);
  v.timings.validate_ms = verdictdetail::ms_since(t0);
  v.preconditions.connected = v.validation.connected;
  v.preconditions.alternating = v.validation.alternating;
  v.preconditions.has_crossing = v.validation.has_crossing;
  v.preconditions.surface_not_disk = !v.validation.surface_is_disk;
  v.preconditions.has_boundary = v.validation.n_boundary >= 1;
  if (!v.preconditions.connected || !v.preconditions.has_crossing) {
    v.status = Status::NotApplicable;
    return v;
  }

  RegionMap rm = trace_regions(d);
  // reducedness is a property of the projection alone; it is evaluated (and
  // reported honestly) even when the alternation precondition already failed
  t0 = clock::now();
  v.reduced_failure = check_reduced(d, rm);
  v.timings.reduced_ms = verdictdetail::ms_since(t0);
  v.preconditions.reduced = !v.reduced_failure.has_value();
  if (!v.preconditions.all()) {
    v.status = Status::NotApplicable;
    return v;
  }

  t0 = clock::now();
  v.conditions.i_witness = check_weakly_prime(d, rm);
  v.conditions.i = v.conditions.i_witness ? CondState::Fail : CondState::Pass;
  v.timings.i_ms = verdictdetail::ms_since(t0);

  t0 = clock::now();
  v.conditions.ii_witness = check_condition_ii(rm);
  v.conditions.ii = v.conditions.ii_witness ? CondState::Fail : CondState::Pass;
  v.timings.ii_ms = verdictdetail::ms_since(t0);

  t0 = clock::now();
  v.conditions.iii_witness = check_condition_iii(rm);
  v.conditions.iii = v.conditions.iii_witness ? CondState::Fail : CondState::Pass;
  v.timings.iii_ms = verdictdetail::ms_since(t0);

  t0 = clock::now();
  ConditionIvResult iv = check_condition_iv(d, rm, iv_budget);
  v.timings.iv_ms = verdictdetail::ms_since(t0);
  v.iv_nodes = iv.nodes;
  switch (iv.outcome) {
    case SearchOutcome::Pass: v.conditions.iv = CondState::Pass; break;
    case SearchOutcome::Fail:
      v.conditions.iv = CondState::Fail;
      v.conditions.iv_witness = iv.witness;
      break;
    case SearchOutcome::Undecided: v.conditions.iv = CondState::Undecided; break;
  }

  v.status = verdictdetail::combine(v.preconditions, v.conditions);
  return v;
}

/// Ambient verdict: user-asserted hypotheses, conditions (i) and (ii) only.
/// The projection surface still may not be a disk; (iii) and (iv) are
/// unnecessary because the annuli they exclude do not extend to the ambient
/// manifold.
inline Verdict theorem_ambient_verdict(const Diagram& d, const AmbientAssertions& a) {
  using clock = std::chrono::steady_clock;
  Verdict v;
  v.theorem = TheoremMode::Ambient;
  v.validation = validate_structure(d);
  v.preconditions.connected = v.validation.connected;
  v.preconditions.alternating = v.validation.alternating;
  v.preconditions.has_crossing = v.validation.has_crossing;
  v.preconditions.surface_not_disk = !v.validation.surface_is_disk;
  v.preconditions.has_boundary = v.validation.n_boundary >= 1;
  if (!a.all() || !v.preconditions.connected || !v.preconditions.has_crossing) {
    v.status = Status::NotApplicable;
    return v;
  }

  RegionMap rm = trace_regions(d);
  auto t0 = clock::now();
  v.reduced_failure = check_reduced(d, rm);
  v.timings.reduced_ms = verdictdetail::ms_since(t0);
  v.preconditions.reduced = !v.reduced_failure.has_value();
  if (!v.preconditions.all()) {
    v.status = Status::NotApplicable;
    return v;
  }

  t0 = clock::now();
  v.conditions.i_witness = check_weakly_prime(d, rm);
  v.conditions.i = v.conditions.i_witness ? CondState::Fail : CondState::Pass;
  v.timings.i_ms = verdictdetail::ms_since(t0);

  t0 = clock::now();
  v.conditions.ii_witness = check_condition_ii(rm);
  v.conditions.ii = v.conditions.ii_witness ? CondState::Fail : CondState::Pass;
  v.timings.ii_ms = verdictdetail::ms_since(t0);

  v.status = verdictdetail::combine(v.preconditions, v.conditions);
  return v;
}

/// Add isolated poles to a closed (zero-puncture) diagram.
inline Diagram stake(const Diagram& d, const std::vector<PunctureMark>& poles) {
  if (!d.punctures.empty()) throw std::invalid_argument("diagram already has punctures");
  for (const auto& p : poles) {
    if (p.crossing < 0 || p.crossing >= d.n_crossings)
      throw std::invalid_argument("pole references nonexistent crossing");
    if (p.corner < 0 || p.corner > 3) throw std::invalid_argument("pole corner out of range");
  }
  Diagram out = d;
  out.punctures.insert(out.punctures.end(), poles.begin(), poles.end());
  return out;
}

struct StakingHit {
  std::vector<RegionId> regions;
  std::vector<PunctureMark> poles;
  Verdict verdict;
};

/// Enumerate pole placements (at most one pole per region, staked regions an
/// independent set in the region-adjacency graph, never a single pole on a
/// sphere) by subset size then lexicographic region id, running the full
/// thickened verdict on each.  First success wins unless `all` streams every
/// one through `sink`.
inline std::optional<StakingHit> find_hyperbolic_staking(
    const Diagram& d, int max_poles, bool all = false,
    const std::function<void(const StakingHit&)>& sink = {},
    long long iv_budget = kDefaultCurveSearchBudget) {
  if (!d.punctures.empty()) throw std::invalid_argument("staking search needs a closed diagram");
  if (max_poles < 1) throw std::invalid_argument("max_poles must be positive");
  ValidationReport base = validate_structure(d);
  if (!base.structurally_ok()) return std::nullopt;
  RegionMap rm = trace_regions(d);

  std::vector<std::vector<char>> adjacent(rm.n_regions(),
                                          std::vector<char>(rm.n_regions(), 0));
  for (const auto& pr : adjacent_region_pairs(rm)) adjacent[pr.r1][pr.r2] = adjacent[pr.r2][pr.r1] = 1;

  std::optional<StakingHit> first;
  std::vector<RegionId> chosen;
  bool done = false;

  std::function<void(int, RegionId)> rec = [&](int want, RegionId next) {
    if (done) return;
    if (want == 0) {
      std::vector<PunctureMark> poles;
      for (RegionId r : chosen) {
        CornerId k = rm.regions[r].corners.front();  // canonical pole corner per region
        poles.push_back({corner_crossing(k), corner_index(k)});
      }
      Verdict v = theorem_thickened_verdict(stake(d, poles), iv_budget);
      if (v.status == Status::TgHyperbolic) {
        StakingHit hit{chosen, poles, std::move(v)};
        if (sink) sink(hit);
        if (!first) first = hit;
        if (!all) done = true;
      }
      return;
    }
    for (RegionId r = next; r < rm.n_regions() && !done; ++r) {
      if (adjacent[r][r]) continue;  // self-adjacent region can never be staked
      bool ok = true;
      for (RegionId s : chosen) ok &= !adjacent[r][s];
      if (!ok) continue;
      chosen.push_back(r);
      rec(want - 1, r + 1);
      chosen.pop_back();
    }
  };

  int max_size = std::min(max_poles, rm.n_regions());
  for (int size = 1; size <= max_size && !done; ++size) {
    if (size == 1 && base.capped_genus == 0) continue;  // once-punctured sphere is a disk
    rec(size, 0);
  }
  return first;
}

}  // namespace skd
