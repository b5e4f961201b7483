#pragma once

// Shared test corpus: the locked fixtures, the generator families up to eight
// crossings, and staking enumeration helpers.

#include <functional>
#include <random>

#include "skd/families.hpp"
#include "skd/regions.hpp"

namespace corpus {

using namespace skd;

struct Entry {
  std::string name;
  Diagram diagram;
  bool reduced_expected = true;  // families with nugatory crossings flag false
  bool alternating_expected = true;
};

/// Generator outputs with at most eight crossings (the oracle corpus).
inline std::vector<Entry> generator_corpus() {
  std::vector<Entry> out;
  for (int k = 1; k <= 8; ++k)
    out.push_back({"twist(" + std::to_string(k) + ")", twist_chain(k), k >= 2, true});
  out.push_back({"grid(2,2)", torus_grid(2, 2), true, true});
  out.push_back({"grid(2,4)", torus_grid(2, 4), true, true});
  out.push_back({"grid(4,2)", torus_grid(4, 2), true, true});
  for (int a = 2; a <= 4; ++a)
    for (int b = a; a + b <= 8; ++b)
      out.push_back({"sum(twist" + std::to_string(a) + ",twist" + std::to_string(b) + ")",
                     twist_sum(a, b), true, true});
  out.push_back({"curl", torus_curl(), true, false});
  return out;
}

/// All pole placements with at most `max_poles` poles, one per region.
inline void for_each_staking(const Diagram& d, int max_poles,
                             const std::function<void(const Diagram&, const std::vector<RegionId>&)>& fn) {
  RegionMap rm = trace_regions(d);
  int n = rm.n_regions();
  std::vector<RegionId> chosen;
  std::function<void(int, int)> rec = [&](int next, int left) {
    {
      Diagram staked = d;
      staked.punctures.clear();
      for (RegionId r : chosen) {
        CornerId k = rm.regions[r].corners.front();
        staked.punctures.push_back({corner_crossing(k), corner_index(k)});
      }
      fn(staked, chosen);
    }
    if (left == 0) return;
    for (int r = next; r < n; ++r) {
      chosen.push_back(r);
      rec(r + 1, left - 1);
      chosen.pop_back();
    }
  };
  rec(0, std::min(max_poles, n));
}

/// Random connected diagrams: uniform fixed-point-free matchings on the darts,
/// resampled until connected.  Over-axes and punctures are random too.
inline Diagram random_diagram(std::mt19937& rng, int max_crossings = 8, int max_punctures = 3) {
  for (;;) {
    int n = 1 + (int)(rng() % max_crossings);
    std::vector<DartId> darts(4 * n);
    for (int i = 0; i < 4 * n; ++i) darts[i] = i;
    std::shuffle(darts.begin(), darts.end(), rng);
    Diagram d;
    d.n_crossings = n;
    d.alpha.assign(4 * n, -1);
    for (int i = 0; i < 4 * n; i += 2) {
      d.alpha[darts[i]] = darts[i + 1];
      d.alpha[darts[i + 1]] = darts[i];
    }
    d.over_axis.resize(n);
    for (auto& a : d.over_axis) a = (int)(rng() % 2);
    int np = (int)(rng() % (max_punctures + 1));
    for (int i = 0; i < np; ++i)
      d.punctures.push_back({(int)(rng() % n), (int)(rng() % 4)});
    d.finalize();
    if (check_connected(d)) return d;
  }
}

}  // namespace corpus
