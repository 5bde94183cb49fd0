#include <doctest.h>

#include "hilbound/fixtures.hpp"
#include "hilbound/instance.hpp"

using namespace hilbound;
using namespace hilbound::cli;

namespace {

const char* kDiscussion = R"(# Discussion ring
[ring]
kind = "semigroup"
generators = [7, 8, 9, 10]

[ideal]
generators = ["t^9", "t^10", "t^14", "t^15"]

[options]
max_power = 16
trials = 5
seed = 12648430
)";

const char* kExample22 = R"([ring]
kind = "plane-quotient"
variables = ["x", "y"]
relation = "x*y^2"
field = "Q"

[ideal]
generators = ["x^2", "y"]
)";

}  // namespace

TEST_CASE("instance parsing") {
  InstanceSpec disc = parse_instance(kDiscussion);
  CHECK(disc.kind == RingKind::semigroup);
  CHECK(disc.semigroup_generators == std::vector<long long>{7, 8, 9, 10});
  CHECK(disc.ideal_generators ==
        std::vector<std::string>{"t^9", "t^10", "t^14", "t^15"});
  CHECK(disc.options.max_power == 16);
  CHECK(disc.options.seed == 12648430);
  CHECK_FALSE(disc.options.essential_rank.has_value());

  InstanceSpec ex = parse_instance(kExample22);
  CHECK(ex.kind == RingKind::plane_quotient);
  CHECK(ex.variables == std::vector<std::string>{"x", "y"});
  CHECK(ex.relation == "x*y^2");
  CHECK(ex.field == FieldTag::rationals());
  CHECK(ex.ideal_generators == std::vector<std::string>{"x^2", "y"});
}

TEST_CASE("instance parse errors") {
  CHECK_THROWS_AS(parse_instance(""), input_error);
  CHECK_THROWS_AS(parse_instance("[ring]\nkind = \"semigroup\"\n"
                                 "generators = [2, 3]\n[ideal]\n"),
                  input_error);  // empty ideal section
  CHECK_THROWS_AS(parse_instance("[ring]\nkind = \"frobnitz\"\n"), parse_error);
  CHECK_THROWS_AS(parse_instance("[ring]\nkind: semigroup\n"), parse_error);
  CHECK_THROWS_AS(parse_instance("[banana]\n"), parse_error);
  CHECK_THROWS_AS(parse_instance("[ring]\nmystery = 3\n"), parse_error);
  // gcd != 1 surfaces at analyze time
  InstanceSpec bad = parse_instance("[ring]\nkind = \"semigroup\"\n"
                                    "generators = [4, 6]\n"
                                    "[ideal]\ngenerators = [4]\n");
  CHECK_THROWS_AS(analyze(bad), input_error);
}

TEST_CASE("semigroup generators as integers are normalized to t^k") {
  InstanceSpec s = parse_instance("[ring]\nkind = \"semigroup\"\n"
                                  "generators = [2, 3]\n"
                                  "[ideal]\ngenerators = [2, 3]\n");
  CHECK(s.ideal_generators == std::vector<std::string>{"t^2", "t^3"});
}

TEST_CASE("analyze report for the Discussion instance") {
  Report report = analyze(parse_instance(kDiscussion));
  CHECK(report.data.e0 == 9);
  CHECK(report.data.e1 == 9);
  CHECK(report.data.colength == 3);
  CHECK(report.data.mu == 4);
  CHECK(report.data.chain_k == 2);
  CHECK(report_exit_code(report) == kExitOk);

  bool chain_seen = false, rvv_seen = false;
  for (const auto& b : report.bound_results) {
    if (b.name == "chain" && b.applicable) {
      chain_seen = true;
      CHECK(b.rhs == 21);
    }
    if (b.name == "rvv" && b.applicable) {
      rvv_seen = true;
      CHECK(b.rhs == 31);
    }
  }
  CHECK(chain_seen);
  CHECK(rvv_seen);
}

TEST_CASE("JSON round-trip and determinism") {
  Report report = analyze(parse_instance(kDiscussion));
  auto j = report_to_json(report);
  Report back = report_from_json(j);
  CHECK(report_to_json(back) == j);
  CHECK(back.spec == report.spec);

  // identical spec + seed give a byte-identical comparable payload
  Report again = analyze(parse_instance(kDiscussion));
  CHECK(report_payload_equal(report, again));
  auto ja = report_to_json(report), jb = report_to_json(again);
  ja.erase("timing_ms");
  jb.erase("timing_ms");
  CHECK(ja.dump() == jb.dump());
}

TEST_CASE("analyze on a quotient instance") {
  Report report = analyze(parse_instance(kExample22));
  CHECK(report.data.e0 == 5);
  CHECK(report.data.e1 == 4);
  CHECK(report.data.colength == 2);
  CHECK(report.seq.values.size() >= 8);
  CHECK(report_exit_code(report) == kExitOk);
  // no chain data for the quotient engine: the chain bound is inapplicable
  for (const auto& b : report.bound_results)
    if (b.name == "chain") CHECK_FALSE(b.applicable);
}

TEST_CASE("unit ideal is rejected") {
  InstanceSpec s = parse_instance("[ring]\nkind = \"semigroup\"\n"
                                  "generators = [2, 3]\n"
                                  "[ideal]\ngenerators = [0]\n");
  CHECK_THROWS_AS(analyze(s), input_error);
}

TEST_CASE("paper fixtures all pass") {
  auto checks = run_paper_fixtures();
  CHECK(checks.size() > 40);
  for (const auto& c : checks) {
    CAPTURE(c.fixture);
    CAPTURE(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("tampered fixture run fails exactly once") {
  FixtureOptions opts;
  opts.tamper = true;
  auto checks = run_paper_fixtures(opts);
  long long fails = 0;
  for (const auto& c : checks)
    if (!c.pass) ++fails;
  CHECK(fails == 1);
  CHECK_FALSE(all_pass(checks));
}

TEST_CASE("fixture subset filter") {
  FixtureOptions opts;
  opts.only = "ex2.3k2";
  auto checks = run_paper_fixtures(opts);
  CHECK(!checks.empty());
  for (const auto& c : checks) CHECK(c.fixture == "ex2.3k2");
  opts.only = "nope";
  CHECK_THROWS_AS(run_paper_fixtures(opts), input_error);
}
