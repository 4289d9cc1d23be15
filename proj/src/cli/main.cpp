#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "liecert/charvar.hpp"
#include "liecert/checks.hpp"
#include "liecert/orbits.hpp"
#include "liecert/slodowy.hpp"
#include "liecert/walg.hpp"

using json = nlohmann::json;
using namespace liecert;

namespace {

std::string rat_str(const Rat& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Rat parse_rat(const std::string& s) { return Rat(s); }

std::vector<int> parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
  if (parts.empty()) throw std::invalid_argument("empty partition");
  for (std::size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1])
      throw std::invalid_argument("partition must be weakly decreasing");
  return parts;
}

json rat_vec_json(const Vec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

std::shared_ptr<const LieAlgebra> build_algebra(char type, int rank) {
  if (type == 'A') {
    if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
    return build_sl(rank + 1);
  }
  if (type == 'D') {
    if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
    return build_so_even(rank);
  }
  throw std::invalid_argument("unsupported type for this command");
}

struct ReportState {
  json report;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  ReportState(const std::string& command, json inputs, unsigned seed) {
    report = {{"version", "1"},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"seed", seed},
              {"verdicts", json::array()},
              {"data", json::object()}};
  }
  void add_verdicts(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
      report["verdicts"].push_back({{"check_id", r.check_id},
                                    {"status", r.status},
                                    {"witness", r.witness},
                                    {"seed", r.seed}});
  }
  int finish(bool strict) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    report["timing_ms"] = static_cast<long long>(ms);
    std::cout << report.dump(2) << std::endl;
    bool any_fail = false, any_unknown = false;
    for (const auto& v : report["verdicts"]) {
      if (v["status"] == "fail") any_fail = true;
      if (v["status"] == "unknown") any_unknown = true;
    }
    if (any_fail) return 1;
    if (strict && any_unknown) return 3;
    return 0;
  }
};

json orbit_json(const LieAlgebra& g, const Partition& p) {
  OrbitDatum o = make_orbit(g, p);
  json j;
  j["partition"] = p.parts;
  if (p.very_even_label)
    j["label"] = std::string(*p.very_even_label == '1' ? "I" : "II");
  j["dimension"] = o.dimension;
  j["diagram"] = weighted_dynkin_diagram(g, o);
  j["rigid"] = is_rigid(g, o);
  return j;
}

int cmd_orbits(char type, int rank, const std::string& partition, unsigned seed,
               bool strict) {
  auto g = build_algebra(type, rank);
  int size_spec = type == 'A' ? rank + 1 : rank;
  json inputs{{"type", std::string(1, type)}, {"rank", rank}};
  if (!partition.empty()) inputs["partition"] = partition;
  ReportState rep("orbits", inputs, seed);
  json list = json::array();
  if (partition.empty()) {
    for (const auto& p : orbit_partitions(type, size_spec))
      list.push_back(orbit_json(*g, p));
  } else {
    Partition p{parse_partition(partition), std::nullopt};
    if (p.total() != (type == 'A' ? rank + 1 : 2 * rank))
      throw std::invalid_argument("partition has the wrong total");
    if (type == 'D' && !in_p1(p.parts))
      throw std::invalid_argument("partition is not an orbit label of so_2r");
    if (type == 'D' && is_very_even(p.parts)) {
      for (char lab : {'1', '2'})
        list.push_back(orbit_json(*g, Partition{p.parts, lab}));
    } else {
      list.push_back(orbit_json(*g, p));
    }
  }
  rep.report["data"]["orbits"] = std::move(list);
  return rep.finish(strict);
}

int cmd_verify(const std::string& id, const CheckOptions& opt, bool strict) {
  json inputs{{"id", id}, {"max_rank", opt.max_rank}};
  if (opt.n) inputs["n"] = *opt.n;
  if (opt.m) inputs["m"] = *opt.m;
  if (opt.r) inputs["r"] = *opt.r;
  if (!opt.case_id.empty()) inputs["case"] = opt.case_id;
  inputs["degree_bound"] = opt.degree_bound;
  ReportState rep("verify", inputs, opt.seed);
  rep.add_verdicts(run_check(id, opt));
  return rep.finish(strict);
}

int cmd_charvar(const std::string& system_id, int param, unsigned seed, bool strict) {
  CaseSystem sys;
  std::vector<Weight> targets;
  if (system_id == "typeA-level-minus1") {
    sys = type_a_level_minus1_system(param);
    targets = {fundamental_weights(sys.datum)[0]};
  } else if (system_id == "xi") {
    sys = xi_system(param);
    targets = {fundamental_weights(sys.datum)[param - 1]};
  } else if (system_id == "xi-hat") {
    sys = xi_hat_system(param);
    targets = {fundamental_weights(sys.datum)[param - 1]};
  } else if (system_id == "typeD") {
    sys = type_d_system(param);
    auto fw = fundamental_weights(sys.datum);
    targets = {fw[param - 2], fw[param - 1]};
  } else {
    throw std::invalid_argument("unknown system id: " + system_id);
  }
  ReportState rep("charvar", json{{"system", system_id}, {"param", param}}, seed);
  auto comps = solve_on_cartan(sys);
  auto cls = classify_components(comps, targets);
  json clist = json::array();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    json c;
    c["base"] = rat_vec_json(comps[i].base.coords);
    c["direction"] = rat_vec_json(comps[i].direction.coords);
    if (cls[i])
      c["target_index"] = *cls[i];
    else
      c["target_index"] = nullptr;
    clist.push_back(std::move(c));
  }
  rep.report["data"]["components"] = std::move(clist);
  json tlist = json::array();
  for (const auto& t : targets) tlist.push_back(rat_vec_json(t.coords));
  rep.report["data"]["targets"] = std::move(tlist);
  return rep.finish(strict);
}

int cmd_central_charge(char type, int rank, const std::string& partition,
                       const std::string& level, unsigned seed, bool strict) {
  auto g = build_algebra(type, rank);
  Partition p{parse_partition(partition), std::nullopt};
  Rat k = parse_rat(level);
  ReportState rep("central-charge",
                  json{{"type", std::string(1, type)},
                       {"rank", rank},
                       {"partition", partition},
                       {"k", level}},
                  seed);
  auto t = sl2_from_orbit(*g, make_orbit(*g, p));
  Rat c = central_charge(WParams{g, t, k});
  rep.report["data"]["central_charge"] = rat_str(c);
  auto e = central_charge_expansion(*g, t);
  rep.report["data"]["expansion"] = {{"constant", rat_str(e.constant)},
                                     {"inv_coeff", rat_str(e.inv_coeff)},
                                     {"mid", rat_str(e.mid)},
                                     {"lin_coeff", rat_str(e.lin_coeff)}};
  return rep.finish(strict);
}

int cmd_sheets(char type, int rank, unsigned seed, bool strict) {
  auto g = build_algebra(type, rank);
  ReportState rep("sheets", json{{"type", std::string(1, type)}, {"rank", rank}},
                  seed);
  json list = json::array();
  for (const auto& s : enumerate_sheets(*g)) {
    json j;
    json levi = json::array();
    for (int i : s.levi.simple_subset) levi.push_back(i + 1);
    j["levi_nodes"] = std::move(levi);
    j["induced_partition"] = s.induced.partition.parts;
    if (s.induced.partition.very_even_label)
      j["label"] =
          std::string(*s.induced.partition.very_even_label == '1' ? "I" : "II");
    j["rank"] = s.rank;
    j["dimension"] = s.dimension;
    list.push_back(std::move(j));
  }
  rep.report["data"]["sheets"] = std::move(list);
  return rep.finish(strict);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for nilpotent orbits, characteristic "
               "varieties and W-algebra levels"};
  app.require_subcommand(1);
  bool strict = false;
  unsigned seed = 0;
  std::string natural_levels;
  app.add_flag("--strict", strict, "exit 3 when any verdict is unknown");
  app.add_option("--seed", seed, "base seed for sampling certificates");
  app.add_option("--natural-levels", natural_levels,
                 "path to the natural-level table (default: $LIECERT_DATA)");

  std::string type_str, partition, level, verify_id, system_id, case_id;
  int rank = 0, param = 0;
  CheckOptions opt;
  std::optional<int> opt_n, opt_m, opt_r;

  auto* orbits = app.add_subcommand("orbits", "list nilpotent orbits");
  orbits->add_option("type", type_str, "A or D")->required();
  orbits->add_option("rank", rank)->required();
  orbits->add_option("--partition", partition, "single orbit detail, e.g. 2,2");

  auto* verify = app.add_subcommand("verify", "run a named check (or 'all')");
  verify->add_option("id", verify_id)->required();
  verify->add_option("--n", opt_n, "restrict to sl_n");
  verify->add_option("--m", opt_m, "restrict to sl_2m");
  verify->add_option("--r", opt_r, "restrict to so_2r");
  verify->add_option("--case", case_id, "sing-level case: v1, v1sq, v0, w1");
  verify->add_option("--max-rank", opt.max_rank, "rank bound for ranged checks");
  verify->add_option("--degree-bound", opt.degree_bound,
                     "certificate search degree");

  auto* charvar = app.add_subcommand("charvar", "solve a Cartan system");
  charvar->add_option("system", system_id,
                      "typeA-level-minus1 | xi | xi-hat | typeD")
      ->required();
  charvar->add_option("--n", opt_n);
  charvar->add_option("--m", opt_m);
  charvar->add_option("--r", opt_r);

  auto* cc = app.add_subcommand("central-charge", "W-algebra central charge");
  cc->add_option("type", type_str)->required();
  cc->add_option("rank", rank)->required();
  cc->add_option("partition", partition)->required();
  cc->add_option("k", level)->required();

  auto* sheets = app.add_subcommand("sheets", "enumerate sheets");
  sheets->add_option("type", type_str)->required();
  sheets->add_option("rank", rank)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors collapse to exit code 2
  }

  try {
    if (app.got_subcommand(verify)) {
      opt.n = opt_n;
      opt.m = opt_m;
      opt.r = opt_r;
      opt.case_id = case_id;
      opt.seed = seed;
      opt.natural_levels_path = natural_levels;
      return cmd_verify(verify_id, opt, strict);
    }
    char type = type_str.empty() ? '?' : type_str[0];
    if (app.got_subcommand(orbits)) return cmd_orbits(type, rank, partition, seed, strict);
    if (app.got_subcommand(cc))
      return cmd_central_charge(type, rank, partition, level, seed, strict);
    if (app.got_subcommand(sheets)) return cmd_sheets(type, rank, seed, strict);
    if (app.got_subcommand(charvar)) {
      if (system_id == "typeA-level-minus1") {
        if (!opt_n) throw std::invalid_argument("charvar: --n required");
        param = *opt_n;
      } else if (system_id == "xi" || system_id == "xi-hat") {
        if (!opt_m) throw std::invalid_argument("charvar: --m required");
        param = *opt_m;
      } else if (system_id == "typeD") {
        if (!opt_r) throw std::invalid_argument("charvar: --r required");
        param = *opt_r;
      }
      return cmd_charvar(system_id, param, seed, strict);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}
