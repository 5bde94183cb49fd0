#pragma once

#include <string>
#include <vector>

#include "hilbound/errors.hpp"

namespace hilbound::cli {

// One asserted value of a built-in fixture.
struct FixtureCheck {
  std::string fixture;
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct FixtureOptions {
  std::string only;    // run a single fixture id ("ex2.2", "ex2.3k1".."k4",
                       // "ex2.4", "disc3.11"); empty = all
  bool tamper = false; // negative control: corrupt one expectation
};

std::vector<FixtureCheck> run_paper_fixtures(const FixtureOptions& opts = {});

std::string render_fixture_table(const std::vector<FixtureCheck>& checks);

inline bool all_pass(const std::vector<FixtureCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace hilbound::cli
