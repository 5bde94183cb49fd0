#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbound/errors.hpp"
#include "hilbound/field.hpp"
#include "hilbound/numsemi.hpp"

namespace hilbound::hilbert {

// Exact colengths lambda(R/I^n) for n = first_n, first_n+1, ...
struct HilbertSeq {
  std::vector<long long> values;
  long long first_n = 1;

  long long last_n() const {
    return first_n + static_cast<long long>(values.size()) - 1;
  }
  bool covers(long long n) const { return n >= first_n && n <= last_n(); }
  long long at(long long n) const {
    if (!covers(n)) throw input_error("Hilbert sequence index out of window");
    return values[static_cast<std::size_t>(n - first_n)];
  }
};

struct FitResult {
  long long e0 = 0;
  long long e1 = 0;
  long long stabilized_at = 0;  // least n0 with lambda(R/I^n) = e0 n - e1 onwards
};

// Fits lambda(R/I^n) = e0 n - e1 on the stable tail: requires a constant
// first difference persisting to the window end with at least 3 agreeing
// steps. Throws window_error when the window is too small.
FitResult fit_e0_e1(const HilbertSeq& seq);

// The invariant bundle consumed by the bound ledger.
struct HilbertData {
  long long e0 = 0;
  long long e1 = 0;
  long long stabilized_at = 0;
  long long colength = 0;
  std::optional<long long> closure_colength;
  std::optional<long long> r;
  bool r_probabilistic = false;
  std::optional<long long> mu;
  std::vector<long long> mu_powers;  // mu(I^n) for n = 1..r (when r is known)
  std::optional<long long> ord;
  std::optional<long long> t;        // essential rank
  std::optional<long long> chain_k;  // Theorem-2.1 chain parameter
  std::optional<bool> integrally_closed;
  long long d = 1;
};

// Raw engine outputs plus redundant values for consistency checking.
struct EngineData {
  HilbertSeq seq;
  long long colength = 0;
  std::optional<long long> closure_colength;
  std::optional<long long> r;
  bool r_probabilistic = false;
  std::optional<long long> mu;
  std::vector<long long> mu_powers;
  std::optional<long long> ord;
  std::optional<long long> t;
  std::optional<long long> chain_k;
  std::optional<bool> integrally_closed;
  long long d = 1;
  std::optional<long long> e0_expected;    // engine-side multiplicity
  std::optional<long long> mu_crosscheck;  // lambda(R/mI) - lambda(R/I)
};

// Fits the sequence and validates every redundant computation; disagreement
// raises internal_error, never a silent fix.
HilbertData assemble(const EngineData& engine);

struct IdentityCheck {
  std::string name;
  std::optional<long long> n;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

// Proof-backed identities: e1 = (r+1)e0 - lambda(R/I^{r+1});
// mu(I^n) >= n+1 for n <= r (Eakin-Sathaye); and
// lambda(I^n/I^{n+1}) >= n+k+1 for n <= r when a chain of length k exists.
std::vector<IdentityCheck> check_identities(const HilbertData& data,
                                            const HilbertSeq& seq);

struct SemigroupEngineOptions {
  long long trials = 5;
  std::uint64_t seed = 0xC0FFEE;
  FieldTag field = FieldTag::prime(kDefaultPrime);
  long long max_power = 16;
};

// Full bundle for a monomial ideal in a semigroup ring: sequence (window
// max(8, r+4), which provably stabilizes), closure data, valuation chain,
// reduction number, mu, ord, essential rank 1.
EngineData run_semigroup_engine(const numsemi::MonomialIdeal& ideal,
                                const SemigroupEngineOptions& opts = {});

struct QuotientInstance {
  std::vector<std::string> variables;
  std::string relation;
  std::vector<std::string> ideal_generators;
  FieldTag field = FieldTag::rationals();
};

// Bundle for an ideal in K[[x1,...,xn]]/(relation): sequence with one
// window-doubling retry, colength, mu, ord. No closure/chain/r (the
// quotient engine cannot certify them).
EngineData run_quotient_engine(const QuotientInstance& instance,
                               long long initial_window = 8);

}  // namespace hilbound::hilbert
