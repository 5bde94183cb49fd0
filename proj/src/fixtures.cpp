#include "hilbound/fixtures.hpp"

#include <sstream>

#include "hilbound/bounds.hpp"
#include "hilbound/hilbert.hpp"
#include "hilbound/numsemi.hpp"
#include "hilbound/poly.hpp"

namespace hilbound::cli {

namespace {

using polyring::MonomialOrder;
using polyring::Polynomial;
using Field = RationalField;

struct Recorder {
  std::vector<FixtureCheck>& out;
  std::string fixture;

  void expect(const std::string& name, long long expected, long long actual) {
    out.push_back({fixture, name, std::to_string(expected),
                   std::to_string(actual), expected == actual});
  }
  void expect_bool(const std::string& name, bool expected, bool actual) {
    auto str = [](bool b) { return b ? std::string("true") : std::string("false"); };
    out.push_back({fixture, name, str(expected), str(actual), expected == actual});
  }
};

struct QuotientSetup {
  Field K;
  MonomialOrder ord = MonomialOrder::grevlex(2);
  std::vector<std::string> vars{"x", "y"};
  Polynomial<Field> relation;
  std::vector<Polynomial<Field>> gens;

  QuotientSetup(const std::string& rel, const std::vector<std::string>& gen_texts) {
    relation = polyring::parse_poly(K, ord, rel, vars);
    for (const auto& t : gen_texts)
      gens.push_back(polyring::parse_poly(K, ord, t, vars));
  }
};

// R = K[[x,y]]/(xy^2), I = (x^2, y): lambda(R/I^n) = 5n-4, (e0,e1) = (5,4);
// the chain bound holds with k=1 and fails with k=2.
void fixture_ex22(std::vector<FixtureCheck>& out, bool tamper) {
  Recorder rec{out, "ex2.2"};
  QuotientSetup q("x*y^2", {"x^2", "y"});

  auto seq = polyring::hilbert_sequence_q(q.K, q.ord, q.relation, q.gens, 8);
  for (long long n = 2; n <= 8; ++n)
    rec.expect("lambda(R/I^" + std::to_string(n) + ")", 5 * n - 4,
               seq[static_cast<std::size_t>(n - 1)]);
  rec.expect("lambda(R/I)", 2, seq[0]);

  auto fit = hilbert::fit_e0_e1({seq, 1});
  rec.expect("e0", 5, fit.e0);
  rec.expect("e1", tamper ? 5 : 4, fit.e1);

  // I is integrally closed (paper metadata), so the bound is non-strict.
  auto b1 = bounds::chain_upper(to_int(fit.e0), Int(1), true, to_int(fit.e1));
  rec.expect("chain(k=1).rhs", 6, b1.rhs.get_si());
  rec.expect_bool("chain(k=1).holds", true, b1.holds);
  auto b2 = bounds::chain_upper(to_int(fit.e0), Int(2), true, to_int(fit.e1));
  rec.expect("chain(k=2).rhs", 3, b2.rhs.get_si());
  rec.expect_bool("chain(k=2).holds", false, b2.holds);
  // Note: the paper's remark that e1 equals e0 - lambda(R/I) in this example
  // does not match its own lambda(R/I) = 2; both engine values are asserted.
}

// R = K[[x,y]]/(x^2 y - x y^2), I = (x^{k+1}, y): reduction number 1 via
// z = y + x^{k+1}; lambda(R/I^2) = 2k+4, (e0,e1) = (k+3,2); the chain bound
// holds strictly with parameter k and fails with k+1.
void fixture_ex23(std::vector<FixtureCheck>& out, long long k) {
  Recorder rec{out, "ex2.3k" + std::to_string(k)};
  std::string xk1 = "x^" + std::to_string(k + 1);
  QuotientSetup q("x^2*y - x*y^2", {xk1, "y"});
  auto z = polyring::parse_poly(q.K, q.ord, "y + " + xk1, q.vars);

  rec.expect_bool("verify_reduction(z, r=1)", true,
                  polyring::verify_reduction(q.K, q.ord, q.relation, q.gens, z, 1));
  rec.expect_bool("verify_reduction(z, r=0)", false,
                  polyring::verify_reduction(q.K, q.ord, q.relation, q.gens, z, 0));

  auto seq = polyring::hilbert_sequence_q(q.K, q.ord, q.relation, q.gens, 8);
  rec.expect("lambda(R/I^2)", 2 * k + 4, seq[1]);

  auto fit = hilbert::fit_e0_e1({seq, 1});
  rec.expect("e0", k + 3, fit.e0);
  rec.expect("e1", 2, fit.e1);
  // reduction number 1 forces e0 = lambda(I/I^2)
  rec.expect("lambda(I/I^2)", fit.e0, seq[1] - seq[0]);

  auto bk = bounds::chain_upper(to_int(fit.e0), to_int(k), true, to_int(fit.e1));
  rec.expect("chain(k).rhs", 3, bk.rhs.get_si());
  rec.expect_bool("chain(k).holds_strictly", true, bk.holds && bk.margin > 0);
  auto bk1 = bounds::chain_upper(to_int(fit.e0), to_int(k + 1), true, to_int(fit.e1));
  rec.expect("chain(k+1).rhs", 1, bk1.rhs.get_si());
  rec.expect_bool("chain(k+1).holds", false, bk1.holds);
}

// R = K[[x,y]]/(x^2 y^2), I = (x^2, y): (e0,e1) = (6,6), lambda(R/I) = 2;
// C(e0-2, 2) = 6 is attained sharply.
void fixture_ex24(std::vector<FixtureCheck>& out) {
  Recorder rec{out, "ex2.4"};
  QuotientSetup q("x^2*y^2", {"x^2", "y"});

  auto seq = polyring::hilbert_sequence_q(q.K, q.ord, q.relation, q.gens, 8);
  rec.expect("lambda(R/I)", 2, seq[0]);
  auto fit = hilbert::fit_e0_e1({seq, 1});
  rec.expect("e0", 6, fit.e0);
  rec.expect("e1", 6, fit.e1);

  auto b1 = bounds::chain_upper(to_int(fit.e0), Int(1), true, to_int(fit.e1));
  rec.expect("chain(k=1).rhs", 10, b1.rhs.get_si());
  rec.expect_bool("chain(k=1).holds", true, b1.holds);
  auto b2 = bounds::chain_upper(to_int(fit.e0), Int(2), true, to_int(fit.e1));
  rec.expect("chain(k=2).rhs", 6, b2.rhs.get_si());
  rec.expect_bool("chain(k=2).sharp", true, b2.holds && b2.sharp);
}

// R = k[[t^7,t^8,t^9,t^10]], I = (t^9,t^10,t^14,t^15): integrally closed,
// lambda(R/I) = 3, e0 = e1 = 9, mu = 4; the essential-rank bound gives 21,
// the Rossi-Valla-Vasconcelos bound gives 31.
void fixture_disc311(std::vector<FixtureCheck>& out) {
  Recorder rec{out, "disc3.11"};
  numsemi::NumericalSemigroup ring({7, 8, 9, 10});
  numsemi::MonomialIdeal ideal(ring, {9, 10, 14, 15});

  rec.expect_bool("integral_closure(I) == I", true,
                  numsemi::integral_closure(ideal) == ideal);

  hilbert::EngineData eng = hilbert::run_semigroup_engine(ideal);
  hilbert::HilbertData data = hilbert::assemble(eng);
  rec.expect("lambda(R/I)", 3, data.colength);
  rec.expect("e0", 9, data.e0);
  rec.expect("e1", 9, data.e1);
  rec.expect("mu", 4, data.mu.value_or(-1));
  rec.expect("chain_k", 2, data.chain_k.value_or(-1));

  auto ess = bounds::essential_upper(to_int(data.e0), to_int(*data.closure_colength),
                                     Int(1), to_int(data.e1));
  rec.expect("essential(t=1).rhs", 21, ess.rhs.get_si());
  rec.expect_bool("essential(t=1).holds", true, ess.holds);

  auto rvv = bounds::rvv_upper(to_int(data.e0), to_int(*data.mu), Int(1), to_int(data.colength),
                               to_int(data.e1));
  rec.expect("rvv.rhs", 31, rvv.rhs.get_si());
  rec.expect_bool("rvv.holds", true, rvv.holds);
}

}  // namespace

std::vector<FixtureCheck> run_paper_fixtures(const FixtureOptions& opts) {
  static const std::vector<std::string> ids = {
      "ex2.2", "ex2.3k1", "ex2.3k2", "ex2.3k3", "ex2.3k4", "ex2.4", "disc3.11"};
  if (!opts.only.empty()) {
    bool known = false;
    for (const auto& id : ids) known = known || id == opts.only;
    if (!known) throw input_error("unknown fixture id: " + opts.only);
  }
  auto wanted = [&](const std::string& id) {
    return opts.only.empty() || opts.only == id;
  };

  std::vector<FixtureCheck> out;
  if (wanted("ex2.2")) fixture_ex22(out, opts.tamper);
  for (long long k = 1; k <= 4; ++k)
    if (wanted("ex2.3k" + std::to_string(k))) fixture_ex23(out, k);
  if (wanted("ex2.4")) fixture_ex24(out);
  if (wanted("disc3.11")) fixture_disc311(out);
  return out;
}

std::string render_fixture_table(const std::vector<FixtureCheck>& checks) {
  std::ostringstream out;
  std::size_t wf = 8, wn = 4;
  for (const auto& c : checks) {
    wf = std::max(wf, c.fixture.size());
    wn = std::max(wn, c.name.size());
  }
  std::size_t fails = 0;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS  " : "FAIL  ") << c.fixture;
    for (std::size_t i = c.fixture.size(); i < wf + 2; ++i) out << ' ';
    out << c.name;
    for (std::size_t i = c.name.size(); i < wn + 2; ++i) out << ' ';
    out << "expected " << c.expected;
    if (!c.pass) out << "  got " << c.actual;
    out << "\n";
    if (!c.pass) ++fails;
  }
  out << checks.size() - fails << "/" << checks.size() << " assertions pass\n";
  return out.str();
}

}  // namespace hilbound::cli
