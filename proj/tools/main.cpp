#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbound/bounds.hpp"
#include "hilbound/fixtures.hpp"
#include "hilbound/instance.hpp"
#include "hilbound/selftest.hpp"

namespace {

using namespace hilbound;

int cmd_analyze(const std::string& path, bool json, std::optional<long long> max_power,
                std::optional<unsigned long long> seed) {
  cli::InstanceSpec spec = cli::load_instance(path);
  if (max_power) spec.options.max_power = *max_power;
  if (seed) spec.options.seed = *seed;
  cli::Report report = cli::analyze(spec);
  if (json)
    std::cout << cli::report_to_json(report).dump(2) << "\n";
  else
    std::cout << cli::render_report(report);
  return cli::report_exit_code(report);
}

int cmd_reproduce(const std::string& only, bool json, bool tamper) {
  cli::FixtureOptions opts;
  opts.only = only;
  opts.tamper = tamper;
  auto checks = cli::run_paper_fixtures(opts);
  if (json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json j;
      j["fixture"] = c.fixture;
      j["name"] = c.name;
      j["expected"] = c.expected;
      j["actual"] = c.actual;
      j["pass"] = c.pass;
      arr.push_back(j);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << cli::render_fixture_table(checks);
  }
  return cli::all_pass(checks) ? cli::kExitOk : cli::kExitViolation;
}

int cmd_bounds(const bounds::BoundInputs& in, bool json) {
  auto results = bounds::evaluate_all(in);
  bounds::RankLowerBound rank;
  if (in.closure_colength)
    rank = bounds::essential_rank_lower(in.e0, in.e1, *in.closure_colength);

  if (json) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& b : results) {
      nlohmann::ordered_json bj;
      bj["name"] = b.name;
      bj["kind"] = b.kind == bounds::BoundKind::lower ? "lower" : "upper";
      if (b.applicable) {
        bj["rhs"] = b.rhs.get_str();
        bj["holds"] = b.holds;
        bj["strict_required"] = b.strict_required;
        bj["sharp"] = b.sharp;
        bj["margin"] = b.margin.get_str();
        bj["applicable"] = true;
        bj["reason"] = nullptr;
      } else {
        bj["rhs"] = nullptr;
        bj["holds"] = nullptr;
        bj["strict_required"] = nullptr;
        bj["sharp"] = nullptr;
        bj["margin"] = nullptr;
        bj["applicable"] = false;
        bj["reason"] = b.reason;
      }
      arr.push_back(bj);
    }
    j["bounds"] = arr;
    if (rank.applicable) {
      nlohmann::ordered_json rj;
      rj["ceiling"] = rank.ceiling.get_str();
      rj["exact"] = rank.exact;
      j["essential_rank_lower"] = rj;
    } else {
      j["essential_rank_lower"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& b : results) {
      std::cout << "  " << b.name;
      for (std::size_t i = b.name.size(); i < 12; ++i) std::cout << ' ';
      std::cout << (b.kind == bounds::BoundKind::lower ? "lower" : "upper");
      if (!b.applicable) {
        std::cout << "  inapplicable: " << b.reason << "\n";
        continue;
      }
      std::cout << "  rhs=" << b.rhs.get_str() << "  "
                << (b.holds ? "holds" : "VIOLATED")
                << "  margin=" << b.margin.get_str();
      if (b.sharp) std::cout << " (sharp)";
      std::cout << "\n";
    }
    if (rank.applicable)
      std::cout << "  essential rank t >= " << rank.ceiling.get_str()
                << (rank.exact ? " (rational value)" : "") << "\n";
  }
  for (const auto& b : results)
    if (b.applicable && !b.holds) return cli::kExitViolation;
  return cli::kExitOk;
}

int cmd_selftest(long long instances, unsigned long long seed) {
  cli::SelftestOptions opts;
  opts.instances = instances;
  opts.seed = seed;
  auto result = cli::run_selftest(opts);
  std::cout << cli::render_selftest(result);
  return result.ok() ? cli::kExitOk : cli::kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Samuel data and first-coefficient bound checker for "
               "one-dimensional local rings"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "analyze an instance file");
  std::string path;
  bool a_json = false;
  std::optional<long long> a_max_power;
  std::optional<unsigned long long> a_seed;
  analyze->add_option("file", path, "instance file")->required();
  analyze->add_flag("--json", a_json, "emit the JSON report");
  analyze->add_option("--max-power", a_max_power, "reduction-number search window");
  analyze->add_option("--seed", a_seed, "RNG seed for generic coefficients");

  // reproduce-paper
  auto* repro = app.add_subcommand("reproduce-paper",
                                   "re-run the built-in worked examples");
  std::string only;
  bool r_json = false, tamper = false;
  repro->add_option("--only", only, "fixture id (ex2.2, ex2.3k1..k4, ex2.4, disc3.11)");
  repro->add_flag("--json", r_json, "emit JSON rows");
  repro->add_flag("--tamper", tamper,
                  "negative control: corrupt one expectation (must FAIL)");

  // bounds
  auto* bnd = app.add_subcommand("bounds", "evaluate the bound formulas only");
  long long e0 = 0, e1 = 0, colength = 0, d = 1;
  std::optional<long long> closure, t, mu_opt, ord_opt, r_opt, chain_k;
  bool closed_flag = false;
  bool b_json = false;
  bnd->add_option("--e0", e0)->required();
  bnd->add_option("--e1", e1)->required();
  bnd->add_option("--colength", colength)->required();
  bnd->add_option("--closure-colength", closure);
  bnd->add_option("--t", t);
  bnd->add_option("--mu", mu_opt);
  bnd->add_option("--d", d);
  bnd->add_option("--ord", ord_opt);
  bnd->add_option("--r", r_opt);
  bnd->add_option("--chain-k", chain_k);
  bnd->add_flag("--integrally-closed", closed_flag,
                "treat I as integrally closed (chain bound non-strict)");
  bnd->add_flag("--json", b_json);

  // selftest
  auto* self = app.add_subcommand("selftest", "randomized property suite");
  long long instances = 200;
  unsigned long long s_seed = 0x5EED;
  self->add_option("--instances", instances);
  self->add_option("--seed", s_seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(path, a_json, a_max_power, a_seed);
    if (*repro) return cmd_reproduce(only, r_json, tamper);
    if (*bnd) {
      bounds::BoundInputs in;
      in.e0 = to_int(e0);
      in.e1 = to_int(e1);
      in.colength = to_int(colength);
      in.d = to_int(d);
      if (closure) in.closure_colength = to_int(*closure);
      if (t) in.t = to_int(*t);
      if (mu_opt) in.mu = to_int(*mu_opt);
      if (ord_opt) in.ord = to_int(*ord_opt);
      if (r_opt) in.r = to_int(*r_opt);
      if (chain_k) in.chain_k = to_int(*chain_k);
      if (closed_flag) in.integrally_closed = true;
      return cmd_bounds(in, b_json);
    }
    if (*self) return cmd_selftest(instances, s_seed);
  } catch (const input_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return cli::kExitInput;
  } catch (const window_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return cli::kExitWindow;
  } catch (const internal_error& ex) {
    std::cerr << "internal inconsistency: " << ex.what() << "\n";
    return cli::kExitViolation;
  }
  return cli::kExitOk;
}
