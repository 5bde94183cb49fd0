#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbound/bounds.hpp"
#include "hilbound/errors.hpp"
#include "hilbound/field.hpp"
#include "hilbound/hilbert.hpp"

namespace hilbound::cli {

enum class RingKind { semigroup, plane_quotient };

struct InstanceOptions {
  long long max_power = 16;
  long long trials = 5;
  unsigned long long seed = 0xC0FFEE;
  std::optional<long long> essential_rank;
  std::optional<long long> dimension;

  bool operator==(const InstanceOptions&) const = default;
};

// One analysis instance, as read from the line-oriented [ring]/[ideal]/
// [options] file format.
struct InstanceSpec {
  RingKind kind = RingKind::semigroup;
  std::vector<long long> semigroup_generators;  // semigroup rings
  std::vector<std::string> variables;           // plane quotients
  std::string relation;
  FieldTag field = FieldTag::rationals();
  std::vector<std::string> ideal_generators;  // "t^9" / polynomial texts
  InstanceOptions options;

  bool operator==(const InstanceSpec&) const = default;
};

InstanceSpec parse_instance(const std::string& text);
InstanceSpec load_instance(const std::string& path);

struct Report {
  InstanceSpec spec;
  hilbert::HilbertData data;
  hilbert::HilbertSeq seq;
  std::vector<bounds::BoundResult> bound_results;
  std::vector<hilbert::IdentityCheck> identities;
  long long timing_ms = 0;
};

bool report_payload_equal(const Report& a, const Report& b);  // ignores timing

// Runs the full pipeline: engine, fit, bounds, identities.
Report analyze(const InstanceSpec& spec);

// Deterministic serialization: stable key order, absent optionals as null.
nlohmann::ordered_json report_to_json(const Report& report);
Report report_from_json(const nlohmann::ordered_json& j);

std::string render_report(const Report& report);

// 0, or 1 when any applicable bound is violated
int report_exit_code(const Report& report);

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitWindow = 3;

}  // namespace hilbound::cli
