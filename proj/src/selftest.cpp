#include "hilbound/selftest.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "hilbound/bounds.hpp"
#include "hilbound/hilbert.hpp"
#include "hilbound/numsemi.hpp"

namespace hilbound::cli {

namespace {

using numsemi::MonomialIdeal;
using numsemi::NumericalSemigroup;

NumericalSemigroup random_semigroup(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(2, 4);
  std::uniform_int_distribution<long long> value(2, 30);
  while (true) {
    int k = count(rng);
    std::vector<long long> gens;
    for (int i = 0; i < k; ++i) gens.push_back(value(rng));
    long long g = 0;
    for (long long v : gens) g = std::gcd(g, v);
    if (g == 1) return NumericalSemigroup(gens);
  }
}

MonomialIdeal random_ideal(std::mt19937_64& rng, const NumericalSemigroup& ring) {
  long long lo = ring.multiplicity();
  auto pool = ring.elements_in(lo, lo + 61);
  std::uniform_int_distribution<int> count(1, 4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int k = count(rng);
  std::vector<long long> gens;
  for (int i = 0; i < k; ++i) gens.push_back(pool[pick(rng)]);
  return MonomialIdeal(ring, gens);
}

std::string describe(const MonomialIdeal& ideal) {
  std::ostringstream out;
  out << "S=<";
  const auto& g = ideal.ring().generators();
  for (std::size_t i = 0; i < g.size(); ++i) out << (i ? "," : "") << g[i];
  out << "> I=(";
  for (std::size_t i = 0; i < ideal.min_gens().size(); ++i)
    out << (i ? "," : "") << "t^" << ideal.min_gens()[i];
  out << ")";
  return out.str();
}

}  // namespace

SelftestResult run_selftest(const SelftestOptions& opts) {
  SelftestResult result;
  std::mt19937_64 rng(opts.seed);

  for (long long inst = 0; inst < opts.instances; ++inst) {
    NumericalSemigroup ring = random_semigroup(rng);
    MonomialIdeal ideal = random_ideal(rng, ring);
    std::string id = "#" + std::to_string(inst) + " " + describe(ideal);

    auto fail = [&](const std::string& what) {
      result.failures.push_back(id + ": " + what);
    };
    auto check = [&](bool ok, const std::string& what) {
      ++result.checks_run;
      if (!ok) fail(what);
    };

    try {
      hilbert::SemigroupEngineOptions eopts;
      eopts.trials = 3;
      eopts.seed = opts.seed ^ (0x9E3779B97F4A7C15ull * (inst + 1));
      eopts.max_power = 128;
      hilbert::EngineData eng = hilbert::run_semigroup_engine(ideal, eopts);
      hilbert::HilbertData data = hilbert::assemble(eng);
      long long r = *eng.r;

      // Northcott
      auto nc = bounds::northcott_lower(to_int(data.e0), to_int(data.colength), to_int(data.e1));
      check(nc.holds, "northcott violated");

      // essential rank bound with t = 1 (analytically irreducible)
      auto ess = bounds::essential_upper(to_int(data.e0), to_int(*data.closure_colength),
                                         Int(1), to_int(data.e1));
      check(ess.applicable && ess.holds, "essential(t=1) violated");

      // chain bound with k = lambda(R/Ibar) - 1, strict when I != Ibar
      MonomialIdeal closure = numsemi::integral_closure(ideal);
      bool closed = closure == ideal;
      long long k = *eng.closure_colength - 1;
      if (k >= 1) {
        auto ch = bounds::chain_upper(to_int(data.e0), to_int(k), closed, to_int(data.e1));
        check(ch.applicable && ch.holds,
              closed ? "chain bound violated" : "strict chain bound violated");
        auto chain = numsemi::valuation_chain(ideal);
        check(static_cast<long long>(chain.size()) == *eng.closure_colength,
              "valuation chain length != closure colength");
      }

      // e1 = (r+1) e0 - lambda(R/I^{r+1})
      check(data.e1 == (r + 1) * data.e0 - eng.seq.at(r + 1),
            "e1 identity at r+1 failed");

      // Eakin-Sathaye: mu(I^n) >= n+1 for n <= r
      for (long long n = 1; n <= r; ++n)
        check(eng.mu_powers[static_cast<std::size_t>(n - 1)] >= n + 1,
              "Eakin-Sathaye failed at n=" + std::to_string(n));

      // lambda(I^n/I^{n+1}) >= n + k + 1 for n <= r
      if (k >= 1) {
        for (long long n = 1; n <= r; ++n)
          check(eng.seq.at(n + 1) - eng.seq.at(n) >= n + k + 1,
                "chain colength inequality failed at n=" + std::to_string(n));
      }

      // closure: e0 equal, e1 monotone, idempotent
      check(numsemi::integral_closure(closure) == closure,
            "integral closure not idempotent");
      hilbert::SemigroupEngineOptions copts = eopts;
      copts.seed = eopts.seed ^ 0xABCDEF;
      hilbert::HilbertData cdata =
          hilbert::assemble(hilbert::run_semigroup_engine(closure, copts));
      check(cdata.e0 == data.e0, "e0 changed under integral closure");
      check(data.e1 <= cdata.e1, "e1 not monotone under integral closure");
    } catch (const std::exception& ex) {
      fail(std::string("exception: ") + ex.what());
    }
    ++result.instances_run;
  }
  return result;
}

std::string render_selftest(const SelftestResult& result) {
  std::ostringstream out;
  for (const auto& f : result.failures) out << "FAIL  " << f << "\n";
  out << result.instances_run << " instances, " << result.checks_run
      << " checks, " << result.failures.size() << " violations\n";
  return out.str();
}

}  // namespace hilbound::cli
