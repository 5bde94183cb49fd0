#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hilbound::cli {

struct SelftestOptions {
  long long instances = 200;
  std::uint64_t seed = 0x5EED;
  bool verbose = false;
};

struct SelftestResult {
  long long instances_run = 0;
  long long checks_run = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Randomized semigroup instances (2-4 generators <= 30, ideals of 1-4
// generators) pushed through the whole pipeline; every theorem-backed
// inequality and identity is asserted on each one.
SelftestResult run_selftest(const SelftestOptions& opts = {});

std::string render_selftest(const SelftestResult& result);

}  // namespace hilbound::cli
