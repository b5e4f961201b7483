// skd: decide tg-hyperbolicity of alternating link diagrams in thickened
// surfaces-with-boundary, with machine-checkable witnesses for every failure.
//
// Exit codes: 0 TG_HYPERBOLIC, 1 NOT_TG_HYPERBOLIC, 2 NOT_APPLICABLE,
// 3 UNDECIDED, 4 parse or usage error.  They are chosen so shell pipelines
// can filter hyperbolic diagrams directly.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "skd/families.hpp"
#include "skd/report.hpp"

namespace {

int status_exit_code(skd::Status s) {
  switch (s) {
    case skd::Status::TgHyperbolic: return 0;
    case skd::Status::NotTgHyperbolic: return 1;
    case skd::Status::NotApplicable: return 2;
    default: return 3;
  }
}

skd::Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return skd::parse_diagram(buf.str());
}

skd::AmbientAssertions parse_assertions(const std::string& list) {
  skd::AmbientAssertions a;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all") {
      a = skd::AmbientAssertions::all_asserted();
    } else if (item == "irreducible") {
      a.ambient_irreducible = true;
    } else if (item == "boundary-irreducible") {
      a.ambient_boundary_irreducible = true;
    } else if (item == "incompressible") {
      a.surface_incompressible = true;
    } else if (item == "boundary-incompressible") {
      a.surface_boundary_incompressible = true;
    } else if (item == "tori-meet-f") {
      a.tori_meet_surface = true;
    } else if (item == "annuli-meet-f") {
      a.annuli_meet_surface = true;
    } else if (!item.empty()) {
      throw CLI::ValidationError("--assert-ambient", "unknown assertion '" + item + "'");
    }
  }
  return a;
}

std::vector<skd::PunctureMark> parse_poles(const std::string& spec) {
  std::vector<skd::PunctureMark> poles;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    int c, j;
    if (std::sscanf(item.c_str(), " ( %d , %d )", &c, &j) != 2)
      throw CLI::ValidationError("--poles", "expected \"(c,j);(c,j);...\", got '" + item + "'");
    poles.push_back({c, j});
  }
  if (poles.empty()) throw CLI::ValidationError("--poles", "no poles given");
  return poles;
}

int run_verdict(const skd::Diagram& d, const std::string& name, const std::string& theorem,
                const std::string& assertions, const std::string& format, long long budget) {
  skd::Verdict v;
  if (theorem == "ambient")
    v = skd::theorem_ambient_verdict(d, parse_assertions(assertions));
  else
    v = skd::theorem_thickened_verdict(d, budget);
  if (format == "json")
    std::cout << skd::build_report(name, d, v).dump(2) << "\n";
  else
    std::cout << skd::text_report(name, d, v);
  return status_exit_code(v.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tg-hyperbolicity of alternating link diagrams in thickened surfaces"};
  app.require_subcommand(1);

  std::string path, theorem = "thickened", assertions, format = "text";
  long long budget = skd::kDefaultCurveSearchBudget;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--theorem", theorem, "thickened|ambient")->check(CLI::IsMember({"thickened", "ambient"}));
    cmd->add_option("--assert-ambient", assertions,
                    "comma list of: irreducible, boundary-irreducible, incompressible, "
                    "boundary-incompressible, tori-meet-f, annuli-meet-f; or 'all'");
    cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--budget", budget, "node budget for the condition (iv) search");
  };

  auto* check = app.add_subcommand("check", "run the verdict on an SKD file");
  check->add_option("file", path, "SKD diagram file")->required();
  add_common(check);

  std::string poles_spec;
  auto* stake_cmd = app.add_subcommand("stake", "puncture regions of a closed diagram, then check");
  stake_cmd->add_option("file", path, "SKD diagram file (zero punctures)")->required();
  stake_cmd->add_option("--poles", poles_spec, "pole corners \"(c,j);(c,j);...\"")->required();
  add_common(stake_cmd);

  int max_poles = 2;
  bool all = false;
  auto* search = app.add_subcommand("search-staking", "find pole placements that make the diagram hyperbolic");
  search->add_option("file", path, "SKD diagram file (zero punctures)")->required();
  search->add_option("--max-poles", max_poles, "maximum number of poles")->required();
  search->add_flag("--all", all, "stream every hyperbolic placement, not just the first");
  search->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
  search->add_option("--budget", budget, "node budget for the condition (iv) search");

  std::string family, params, out_path;
  auto* gen = app.add_subcommand("generate", "emit a diagram from a named family");
  gen->add_option("--family", family, "twist|grid|sum|curl")->required()
      ->check(CLI::IsMember({"twist", "grid", "sum", "curl"}));
  gen->add_option("--params", params, "twist: k=3; grid: p=2,q=4; sum: a=3,b=3");
  gen->add_option("-o,--output", out_path, "output SKD path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    if (check->parsed()) {
      skd::Diagram d = load_diagram(path);
      return run_verdict(d, path, theorem, assertions, format, budget);
    }
    if (stake_cmd->parsed()) {
      skd::Diagram d = load_diagram(path);
      skd::Diagram staked = skd::stake(d, parse_poles(poles_spec));
      return run_verdict(staked, path, theorem, assertions, format, budget);
    }
    if (search->parsed()) {
      skd::Diagram d = load_diagram(path);
      int found = 0;
      auto emit = [&](const skd::StakingHit& hit) {
        ++found;
        if (format == "json") {
          nlohmann::json j = {{"regions", hit.regions}, {"poles", nlohmann::json::array()}};
          for (const auto& p : hit.poles) j["poles"].push_back({{"crossing", p.crossing}, {"corner", p.corner}});
          std::cout << j.dump() << "\n";
        } else {
          std::cout << "hyperbolic staking: regions";
          for (auto r : hit.regions) std::cout << " " << r;
          std::cout << "  poles";
          for (const auto& p : hit.poles) std::cout << " (" << p.crossing << "," << p.corner << ")";
          std::cout << "\n";
        }
      };
      skd::find_hyperbolic_staking(d, max_poles, all, emit, budget);
      if (found == 0) {
        std::cout << "no hyperbolic staking with at most " << max_poles << " poles\n";
        return 1;
      }
      return 0;
    }
    if (gen->parsed()) {
      auto get_param = [&](const std::string& key, int def) {
        auto pos = params.find(key + "=");
        if (pos == std::string::npos) return def;
        return std::atoi(params.c_str() + pos + key.size() + 1);
      };
      skd::Diagram d;
      if (family == "twist")
        d = skd::twist_chain(get_param("k", 3));
      else if (family == "grid")
        d = skd::torus_grid(get_param("p", 2), get_param("q", 2));
      else if (family == "sum")
        d = skd::twist_sum(get_param("a", 3), get_param("b", 3));
      else
        d = skd::torus_curl();
      std::string text = skd::serialize_diagram(d);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << text;
      }
      return 0;
    }
  } catch (const skd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 4;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 4;
}
