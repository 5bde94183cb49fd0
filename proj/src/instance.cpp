#include "hilbound/instance.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "hilbound/numsemi.hpp"
#include "hilbound/poly.hpp"

namespace hilbound::cli {

using nlohmann::ordered_json;

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct Value {
  enum class Type { integer, string, int_list, string_list } type;
  long long integer = 0;
  std::string string;
  std::vector<long long> int_list;
  std::vector<std::string> string_list;
};

long long parse_integer(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw parse_error("bad integer '" + tok + "'", line);
  }
}

Value parse_value(const std::string& text, std::size_t line) {
  Value v{};
  if (text.empty()) throw parse_error("missing value", line);
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"')
      throw parse_error("unterminated string", line);
    v.type = Value::Type::string;
    v.string = text.substr(1, text.size() - 2);
    return v;
  }
  if (text.front() == '[') {
    if (text.back() != ']') throw parse_error("unterminated list", line);
    std::string inner = trim(text.substr(1, text.size() - 2));
    bool strings = inner.find('"') != std::string::npos;
    v.type = strings ? Value::Type::string_list : Value::Type::int_list;
    if (inner.empty()) return v;
    std::size_t pos = 0;
    while (pos <= inner.size()) {
      std::size_t comma = inner.find(',', pos);
      std::string tok = trim(inner.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos));
      if (tok.empty()) throw parse_error("empty list element", line);
      if (strings) {
        if (tok.size() < 2 || tok.front() != '"' || tok.back() != '"')
          throw parse_error("expected a quoted string in list", line);
        v.string_list.push_back(tok.substr(1, tok.size() - 2));
      } else {
        v.int_list.push_back(parse_integer(tok, line));
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return v;
  }
  v.type = Value::Type::integer;
  v.integer = parse_integer(text, line);
  return v;
}

}  // namespace

InstanceSpec parse_instance(const std::string& text) {
  InstanceSpec spec;
  bool saw_ring = false, saw_ideal = false, saw_kind = false;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw parse_error("unterminated section header", line_no);
      section = trim(line.substr(1, line.size() - 2));
      if (section == "ring")
        saw_ring = true;
      else if (section == "ideal")
        saw_ideal = true;
      else if (section != "options")
        throw parse_error("unknown section [" + section + "]", line_no);
      continue;
    }

    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw parse_error("expected key = value", line_no);
    std::string key = trim(line.substr(0, eq));
    Value value = parse_value(trim(line.substr(eq + 1)), line_no);
    if (section.empty())
      throw parse_error("key outside of any section", line_no);

    auto expect = [&](Value::Type t, const char* what) {
      if (value.type != t)
        throw parse_error(std::string("value for '") + key + "' must be " + what,
                          line_no);
    };

    if (section == "ring") {
      if (key == "kind") {
        expect(Value::Type::string, "a quoted string");
        saw_kind = true;
        if (value.string == "semigroup")
          spec.kind = RingKind::semigroup;
        else if (value.string == "plane-quotient")
          spec.kind = RingKind::plane_quotient;
        else
          throw parse_error("unknown ring kind \"" + value.string + "\"", line_no);
      } else if (key == "generators") {
        expect(Value::Type::int_list, "a list of integers");
        spec.semigroup_generators = value.int_list;
      } else if (key == "variables") {
        expect(Value::Type::string_list, "a list of quoted strings");
        spec.variables = value.string_list;
      } else if (key == "relation") {
        expect(Value::Type::string, "a quoted string");
        spec.relation = value.string;
      } else if (key == "field") {
        expect(Value::Type::string, "a quoted string");
        spec.field = FieldTag::parse(value.string);
      } else {
        throw parse_error("unknown key '" + key + "' in [ring]", line_no);
      }
    } else if (section == "ideal") {
      if (key == "generators") {
        if (value.type == Value::Type::string_list) {
          spec.ideal_generators = value.string_list;
        } else if (value.type == Value::Type::int_list) {
          for (long long e : value.int_list)
            spec.ideal_generators.push_back("t^" + std::to_string(e));
        } else {
          throw parse_error("ideal generators must be a list", line_no);
        }
      } else {
        throw parse_error("unknown key '" + key + "' in [ideal]", line_no);
      }
    } else {  // options
      if (key == "max_power") {
        expect(Value::Type::integer, "an integer");
        spec.options.max_power = value.integer;
      } else if (key == "trials") {
        expect(Value::Type::integer, "an integer");
        spec.options.trials = value.integer;
      } else if (key == "seed") {
        expect(Value::Type::integer, "an integer");
        spec.options.seed = static_cast<unsigned long long>(value.integer);
      } else if (key == "essential_rank") {
        expect(Value::Type::integer, "an integer");
        spec.options.essential_rank = value.integer;
      } else if (key == "dimension") {
        expect(Value::Type::integer, "an integer");
        spec.options.dimension = value.integer;
      } else {
        throw parse_error("unknown key '" + key + "' in [options]", line_no);
      }
    }
  }

  if (!saw_ring || !saw_kind) throw input_error("missing [ring] section with kind");
  if (!saw_ideal || spec.ideal_generators.empty())
    throw input_error("missing or empty [ideal] section");
  if (spec.kind == RingKind::semigroup) {
    if (spec.semigroup_generators.empty())
      throw input_error("semigroup ring needs generators");
  } else {
    if (spec.variables.empty()) throw input_error("plane quotient needs variables");
    if (spec.relation.empty()) throw input_error("plane quotient needs a relation");
  }
  return spec;
}

InstanceSpec load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open instance file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

namespace {

long long semigroup_exponent(const std::string& text) {
  polyring::RawPoly rp = polyring::parse_poly_text(text, {"t"});
  if (rp.terms.size() != 1 || rp.terms[0].first != 1)
    throw input_error("semigroup ideal generators must be monomials t^k, got '" +
                      text + "'");
  return rp.terms[0].second[0];
}

bounds::BoundInputs to_bound_inputs(const hilbert::HilbertData& d) {
  bounds::BoundInputs in;
  in.e0 = to_int(d.e0);
  in.e1 = to_int(d.e1);
  in.colength = to_int(d.colength);
  if (d.closure_colength) in.closure_colength = to_int(*d.closure_colength);
  if (d.r) in.r = to_int(*d.r);
  if (d.t) in.t = to_int(*d.t);
  if (d.chain_k) in.chain_k = to_int(*d.chain_k);
  if (d.mu) in.mu = to_int(*d.mu);
  if (d.ord) in.ord = to_int(*d.ord);
  in.integrally_closed = d.integrally_closed;
  in.d = to_int(d.d);
  return in;
}

}  // namespace

Report analyze(const InstanceSpec& spec) {
  auto t0 = std::chrono::steady_clock::now();
  Report report;
  report.spec = spec;

  hilbert::EngineData eng;
  if (spec.kind == RingKind::semigroup) {
    numsemi::NumericalSemigroup ring(spec.semigroup_generators);
    std::vector<long long> exps;
    for (const auto& g : spec.ideal_generators)
      exps.push_back(semigroup_exponent(g));
    numsemi::MonomialIdeal ideal(ring, exps);
    if (ideal.is_unit()) throw input_error("ideal is the unit ideal");

    hilbert::SemigroupEngineOptions opts;
    opts.trials = spec.options.trials;
    opts.seed = spec.options.seed;
    opts.max_power = spec.options.max_power;
    eng = hilbert::run_semigroup_engine(ideal, opts);
    if (spec.options.essential_rank) eng.t = *spec.options.essential_rank;
  } else {
    hilbert::QuotientInstance qi;
    qi.variables = spec.variables;
    qi.relation = spec.relation;
    qi.ideal_generators = spec.ideal_generators;
    qi.field = spec.field;
    eng = hilbert::run_quotient_engine(qi);
    if (spec.options.essential_rank) eng.t = *spec.options.essential_rank;
  }
  if (spec.options.dimension) eng.d = *spec.options.dimension;

  report.data = hilbert::assemble(eng);
  report.seq = eng.seq;
  report.bound_results = bounds::evaluate_all(to_bound_inputs(report.data));
  report.identities = hilbert::check_identities(report.data, report.seq);
  report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
  return report;
}

namespace {

long long int_to_ll(const Int& v) {
  if (!v.fits_slong_p()) throw internal_error("bound value exceeds 64 bits");
  return v.get_si();
}

ordered_json opt_to_json(const std::optional<long long>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::optional<long long> opt_from_json(const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<long long>();
}

ordered_json spec_to_json(const InstanceSpec& s) {
  ordered_json j;
  j["kind"] = s.kind == RingKind::semigroup ? "semigroup" : "plane-quotient";
  if (s.kind == RingKind::semigroup) {
    j["generators"] = s.semigroup_generators;
  } else {
    j["variables"] = s.variables;
    j["relation"] = s.relation;
    j["field"] = s.field.to_string();
  }
  j["ideal"] = s.ideal_generators;
  ordered_json o;
  o["max_power"] = s.options.max_power;
  o["trials"] = s.options.trials;
  o["seed"] = s.options.seed;
  o["essential_rank"] = opt_to_json(s.options.essential_rank);
  o["dimension"] = opt_to_json(s.options.dimension);
  j["options"] = o;
  return j;
}

InstanceSpec spec_from_json(const ordered_json& j) {
  InstanceSpec s;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "semigroup") {
    s.kind = RingKind::semigroup;
    s.semigroup_generators = j.at("generators").get<std::vector<long long>>();
  } else if (kind == "plane-quotient") {
    s.kind = RingKind::plane_quotient;
    s.variables = j.at("variables").get<std::vector<std::string>>();
    s.relation = j.at("relation").get<std::string>();
    s.field = FieldTag::parse(j.at("field").get<std::string>());
  } else {
    throw input_error("bad kind in report JSON");
  }
  s.ideal_generators = j.at("ideal").get<std::vector<std::string>>();
  const auto& o = j.at("options");
  s.options.max_power = o.at("max_power").get<long long>();
  s.options.trials = o.at("trials").get<long long>();
  s.options.seed = o.at("seed").get<unsigned long long>();
  s.options.essential_rank = opt_from_json(o.at("essential_rank"));
  s.options.dimension = opt_from_json(o.at("dimension"));
  return s;
}

}  // namespace

ordered_json report_to_json(const Report& report) {
  const auto& d = report.data;
  ordered_json j;
  j["spec"] = spec_to_json(report.spec);

  ordered_json h;
  h["e0"] = d.e0;
  h["e1"] = d.e1;
  h["stabilized_at"] = d.stabilized_at;
  h["sequence"] = report.seq.values;
  h["colength"] = d.colength;
  h["closure_colength"] = opt_to_json(d.closure_colength);
  h["r"] = opt_to_json(d.r);
  h["r_probabilistic"] = d.r ? ordered_json(d.r_probabilistic) : ordered_json(nullptr);
  h["mu"] = opt_to_json(d.mu);
  h["ord"] = opt_to_json(d.ord);
  h["t"] = opt_to_json(d.t);
  h["chain_k"] = opt_to_json(d.chain_k);
  h["d"] = d.d;
  j["hilbert"] = h;

  ordered_json barr = ordered_json::array();
  for (const auto& b : report.bound_results) {
    ordered_json bj;
    bj["name"] = b.name;
    bj["kind"] = b.kind == bounds::BoundKind::lower ? "lower" : "upper";
    if (b.applicable) {
      bj["rhs"] = int_to_ll(b.rhs);
      bj["holds"] = b.holds;
      bj["strict_required"] = b.strict_required;
      bj["sharp"] = b.sharp;
      bj["margin"] = int_to_ll(b.margin);
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
    barr.push_back(bj);
  }
  j["bounds"] = barr;

  ordered_json iarr = ordered_json::array();
  for (const auto& c : report.identities) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["n"] = opt_to_json(c.n);
    cj["lhs"] = c.lhs;
    cj["rhs"] = c.rhs;
    cj["holds"] = c.holds;
    iarr.push_back(cj);
  }
  j["identities"] = iarr;

  j["timing_ms"] = report.timing_ms;
  return j;
}

Report report_from_json(const ordered_json& j) {
  Report r;
  r.spec = spec_from_json(j.at("spec"));
  const auto& h = j.at("hilbert");
  r.data.e0 = h.at("e0").get<long long>();
  r.data.e1 = h.at("e1").get<long long>();
  r.data.stabilized_at = h.at("stabilized_at").get<long long>();
  r.seq.values = h.at("sequence").get<std::vector<long long>>();
  r.seq.first_n = 1;
  r.data.colength = h.at("colength").get<long long>();
  r.data.closure_colength = opt_from_json(h.at("closure_colength"));
  r.data.r = opt_from_json(h.at("r"));
  r.data.r_probabilistic =
      h.at("r_probabilistic").is_null() ? false : h.at("r_probabilistic").get<bool>();
  r.data.mu = opt_from_json(h.at("mu"));
  r.data.ord = opt_from_json(h.at("ord"));
  r.data.t = opt_from_json(h.at("t"));
  r.data.chain_k = opt_from_json(h.at("chain_k"));
  r.data.d = h.at("d").get<long long>();

  for (const auto& bj : j.at("bounds")) {
    bounds::BoundResult b;
    b.name = bj.at("name").get<std::string>();
    b.kind = bj.at("kind").get<std::string>() == "lower" ? bounds::BoundKind::lower
                                                         : bounds::BoundKind::upper;
    b.applicable = bj.at("applicable").get<bool>();
    if (b.applicable) {
      b.rhs = to_int(bj.at("rhs").get<long long>());
      b.holds = bj.at("holds").get<bool>();
      b.strict_required = bj.at("strict_required").get<bool>();
      b.sharp = bj.at("sharp").get<bool>();
      b.margin = to_int(bj.at("margin").get<long long>());
    } else {
      b.reason = bj.at("reason").get<std::string>();
    }
    r.bound_results.push_back(std::move(b));
  }
  for (const auto& cj : j.at("identities")) {
    hilbert::IdentityCheck c;
    c.name = cj.at("name").get<std::string>();
    c.n = opt_from_json(cj.at("n"));
    c.lhs = cj.at("lhs").get<long long>();
    c.rhs = cj.at("rhs").get<long long>();
    c.holds = cj.at("holds").get<bool>();
    r.identities.push_back(std::move(c));
  }
  r.timing_ms = j.at("timing_ms").get<long long>();
  return r;
}

bool report_payload_equal(const Report& a, const Report& b) {
  ordered_json ja = report_to_json(a), jb = report_to_json(b);
  ja.erase("timing_ms");
  jb.erase("timing_ms");
  return ja == jb;
}

std::string render_report(const Report& report) {
  std::ostringstream out;
  const auto& d = report.data;
  const auto& s = report.spec;

  out << "ring: ";
  if (s.kind == RingKind::semigroup) {
    out << "semigroup <";
    for (std::size_t i = 0; i < s.semigroup_generators.size(); ++i)
      out << (i ? "," : "") << s.semigroup_generators[i];
    out << ">";
  } else {
    out << "K[[";
    for (std::size_t i = 0; i < s.variables.size(); ++i)
      out << (i ? "," : "") << s.variables[i];
    out << "]]/(" << s.relation << ") over " << s.field.to_string();
  }
  out << "\nideal: (";
  for (std::size_t i = 0; i < s.ideal_generators.size(); ++i)
    out << (i ? ", " : "") << s.ideal_generators[i];
  out << ")\n";

  auto opt = [](const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  out << "hilbert: e0=" << d.e0 << " e1=" << d.e1
      << " stabilized_at=" << d.stabilized_at << " colength=" << d.colength
      << " closure_colength=" << opt(d.closure_colength) << " r=" << opt(d.r);
  if (d.r && d.r_probabilistic) out << " (probabilistic)";
  out << " mu=" << opt(d.mu) << " ord=" << opt(d.ord) << " t=" << opt(d.t)
      << " chain_k=" << opt(d.chain_k) << " d=" << d.d << "\n";

  out << "sequence:";
  for (long long v : report.seq.values) out << " " << v;
  out << "\n";

  out << "bounds:\n";
  for (const auto& b : report.bound_results) {
    out << "  " << b.name;
    for (std::size_t i = b.name.size(); i < 12; ++i) out << ' ';
    out << (b.kind == bounds::BoundKind::lower ? "lower" : "upper");
    if (!b.applicable) {
      out << "  inapplicable: " << b.reason << "\n";
      continue;
    }
    out << "  rhs=" << b.rhs.get_str() << "  "
        << (b.holds ? "holds" : "VIOLATED") << "  margin=" << b.margin.get_str();
    if (b.strict_required) out << " (strict required)";
    if (b.sharp) out << " (sharp)";
    out << "\n";
  }

  if (!report.identities.empty()) {
    out << "identities:\n";
    for (const auto& c : report.identities) {
      out << "  " << c.name;
      if (c.n) out << " (n=" << *c.n << ")";
      out << ": " << c.lhs
          << (c.name == "e1_at_r_plus_1" ? " == " : " >= ") << c.rhs << "  "
          << (c.holds ? "ok" : "FAILED") << "\n";
    }
  }
  out << "timing: " << report.timing_ms << " ms\n";
  return out.str();
}

int report_exit_code(const Report& report) {
  for (const auto& b : report.bound_results)
    if (b.applicable && !b.holds) return kExitViolation;
  for (const auto& c : report.identities)
    if (!c.holds) return kExitViolation;
  return kExitOk;
}

}  // namespace hilbound::cli
