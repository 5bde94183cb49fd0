#include "hilbound/hilbert.hpp"

#include <algorithm>

#include "hilbound/poly.hpp"

namespace hilbound::hilbert {

FitResult fit_e0_e1(const HilbertSeq& seq) {
  const auto& v = seq.values;
  std::size_t n = v.size();
  if (n < 4) throw input_error("fit needs a window of at least 4 values");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (v[i + 1] < v[i])
      throw input_error("non-monotone colength sequence");

  std::vector<long long> diff(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) diff[i] = v[i + 1] - v[i];

  // least i0 with a constant difference through the window end and at least
  // three agreeing steps
  std::size_t i0 = n - 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    if (diff[i] != diff[n - 2]) break;
    i0 = i;
  }
  if (n - 1 - i0 < 3)
    throw window_error("Hilbert function not stabilized within window");

  FitResult fit;
  fit.e0 = diff[i0];
  fit.stabilized_at = seq.first_n + static_cast<long long>(i0);
  fit.e1 = fit.e0 * fit.stabilized_at - v[i0];
  if (fit.e0 < 1) throw input_error("fitted e0 < 1 (improper ideal?)");
  if (fit.e1 < 0)
    throw input_error("fitted e1 < 0 contradicts Northcott for a proper ideal");
  for (std::size_t i = i0; i < n; ++i) {
    long long abs_n = seq.first_n + static_cast<long long>(i);
    if (fit.e0 * abs_n - v[i] != fit.e1)
      throw internal_error("inconsistent e1 across the stabilized tail");
  }
  return fit;
}

HilbertData assemble(const EngineData& engine) {
  FitResult fit = fit_e0_e1(engine.seq);

  if (engine.e0_expected && *engine.e0_expected != fit.e0)
    throw internal_error("engine multiplicity " +
                         std::to_string(*engine.e0_expected) +
                         " disagrees with fitted e0 " + std::to_string(fit.e0));
  if (engine.mu && engine.mu_crosscheck && *engine.mu != *engine.mu_crosscheck)
    throw internal_error("mu(I) disagrees with lambda(R/mI) - lambda(R/I)");
  if (engine.seq.first_n == 1 && engine.colength != engine.seq.at(1))
    throw internal_error("colength disagrees with lambda(R/I)");
  if (fit.e1 < fit.e0 - engine.colength)
    throw internal_error("Northcott violated by engine data: engine bug");
  if (engine.r) {
    long long n = *engine.r + 1;
    if (engine.seq.covers(n) &&
        fit.e1 != n * fit.e0 - engine.seq.at(n))
      throw internal_error("e1 != (r+1)e0 - lambda(R/I^{r+1})");
  }

  HilbertData data;
  data.e0 = fit.e0;
  data.e1 = fit.e1;
  data.stabilized_at = fit.stabilized_at;
  data.colength = engine.colength;
  data.closure_colength = engine.closure_colength;
  data.r = engine.r;
  data.r_probabilistic = engine.r_probabilistic;
  data.mu = engine.mu;
  data.mu_powers = engine.mu_powers;
  data.ord = engine.ord;
  data.t = engine.t;
  data.chain_k = engine.chain_k;
  data.integrally_closed = engine.integrally_closed;
  data.d = engine.d;
  return data;
}

std::vector<IdentityCheck> check_identities(const HilbertData& data,
                                            const HilbertSeq& seq) {
  std::vector<IdentityCheck> checks;
  if (!data.r) return checks;
  long long r = *data.r;

  if (seq.covers(r + 1)) {
    IdentityCheck c;
    c.name = "e1_at_r_plus_1";
    c.n = r + 1;
    c.lhs = data.e1;
    c.rhs = (r + 1) * data.e0 - seq.at(r + 1);
    c.holds = c.lhs == c.rhs;
    checks.push_back(c);
  }
  for (long long n = 1; n <= r; ++n) {
    if (static_cast<std::size_t>(n) > data.mu_powers.size()) break;
    IdentityCheck c;
    c.name = "eakin_sathaye";
    c.n = n;
    c.lhs = data.mu_powers[static_cast<std::size_t>(n - 1)];
    c.rhs = n + 1;
    c.holds = c.lhs >= c.rhs;
    checks.push_back(c);
  }
  if (data.chain_k && *data.chain_k >= 1) {
    for (long long n = 1; n <= r && seq.covers(n + 1); ++n) {
      IdentityCheck c;
      c.name = "chain_colength";
      c.n = n;
      c.lhs = seq.at(n + 1) - seq.at(n);
      c.rhs = n + *data.chain_k + 1;
      c.holds = c.lhs >= c.rhs;
      checks.push_back(c);
    }
  }
  return checks;
}

EngineData run_semigroup_engine(const numsemi::MonomialIdeal& ideal,
                                const SemigroupEngineOptions& opts) {
  using namespace numsemi;
  if (ideal.is_unit()) throw input_error("ideal is the unit ideal");

  ReductionOptions ropts;
  ropts.trials = opts.trials;
  ropts.seed = opts.seed;
  ropts.field = opts.field;
  ropts.max_power = opts.max_power;
  ReductionResult red = reduction_number(ideal, ropts);

  EngineData out;
  long long window = std::max<long long>(8, red.r + 4);
  out.seq.values = hilbert_sequence(ideal, window);
  out.seq.first_n = 1;
  out.colength = out.seq.values.front();

  MonomialIdeal closure = integral_closure(ideal);
  out.closure_colength = colength(closure);
  out.integrally_closed = (closure == ideal);

  auto chain = valuation_chain(ideal);
  if (!chain.empty())
    out.chain_k = static_cast<long long>(chain.size()) - 1;

  out.r = red.r;
  out.r_probabilistic = red.probabilistic;
  out.mu = mu(ideal);
  for (long long n = 1; n <= red.r; ++n)
    out.mu_powers.push_back(mu(ideal_pow(ideal, n)));
  out.ord = ord_in_m(ideal);
  out.t = 1;  // analytically irreducible: single branch
  out.d = 1;
  out.e0_expected = multiplicity_e0(ideal);

  MonomialIdeal m = maximal_ideal(ideal.ring());
  out.mu_crosscheck = colength(ideal_mul(m, ideal)) - out.colength;
  return out;
}

namespace {

template <class F>
EngineData run_quotient_engine_impl(const F& K,
                                    const QuotientInstance& instance,
                                    long long initial_window) {
  using namespace polyring;
  MonomialOrder ord = MonomialOrder::grevlex(instance.variables.size());

  Polynomial<F> relation =
      parse_poly(K, ord, instance.relation, instance.variables);
  if (relation.is_zero()) throw input_error("relation polynomial is zero");
  for (const auto& t : relation.terms)
    if (t.mono.is_one())
      throw input_error("relation must have zero constant term");

  std::vector<Polynomial<F>> gens;
  for (const auto& text : instance.ideal_generators) {
    Polynomial<F> g = parse_poly(K, ord, text, instance.variables);
    if (g.is_zero()) throw input_error("zero ideal generator: " + text);
    gens.push_back(std::move(g));
  }
  if (gens.empty()) throw input_error("ideal needs at least one generator");

  EngineData out;
  long long window = initial_window;
  for (int attempt = 0;; ++attempt) {
    out.seq.values = hilbert_sequence_q(K, ord, relation, gens, window);
    out.seq.first_n = 1;
    try {
      (void)fit_e0_e1(out.seq);
      break;
    } catch (const window_error&) {
      if (attempt >= 1) throw;
      window *= 2;  // one automatic retry with a doubled window
    }
  }
  out.colength = out.seq.values.front();
  if (out.colength == 0) throw input_error("unit ideal");
  out.mu = mu_quotient(K, ord, relation, gens);
  out.ord = ord_in_m_quotient(K, ord, relation, gens, 32);
  out.d = 1;
  return out;
}

}  // namespace

EngineData run_quotient_engine(const QuotientInstance& instance,
                               long long initial_window) {
  if (instance.variables.empty()) throw input_error("no variables");
  if (instance.field.is_prime_field()) {
    PrimeField K(instance.field.modulus);
    return run_quotient_engine_impl(K, instance, initial_window);
  }
  RationalField K;
  return run_quotient_engine_impl(K, instance, initial_window);
}

}  // namespace hilbound::hilbert
