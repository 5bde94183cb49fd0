#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilbound/errors.hpp"
#include "hilbound/field.hpp"

namespace hilbound::bounds {

// n(n-1)/2 for n >= 2, 0 for n in {0,1}; negative arguments are rejected
// (callers mark the bound inapplicable instead).
Int binom2(const Int& n);

enum class BoundKind { lower, upper };

// One evaluated inequality on e1.
struct BoundResult {
  std::string name;
  BoundKind kind = BoundKind::upper;
  bool applicable = true;
  std::string reason;  // why not applicable
  Int rhs = 0;
  bool holds = false;
  bool strict_required = false;  // strict case of the chain bound
  bool sharp = false;            // equality attained
  Int margin = 0;                // e1 - rhs for lower bounds, rhs - e1 for upper
};

struct BoundInputs {
  Int e0 = 1;
  Int e1 = 0;
  Int colength = 1;
  std::optional<Int> closure_colength;
  std::optional<Int> r;
  std::optional<Int> t;
  std::optional<Int> chain_k;
  std::optional<Int> mu;
  std::optional<Int> ord;
  std::optional<bool> integrally_closed;
  Int d = 1;
};

// e1 >= e0 - lambda(R/I)
BoundResult northcott_lower(const Int& e0, const Int& colength, const Int& e1);

// e1 >= e0 - lambda(R/I) + r - 1, valid for d <= 2
BoundResult rossi_lower(const Int& e0, const Int& colength,
                        const std::optional<Int>& r, const Int& d,
                        const Int& e1);

// e1 <= C(e0-k, 2) given a chain of k-1 distinct integrally closed ideals
// strictly between m and Ibar; strict when I is not integrally closed
BoundResult chain_upper(const Int& e0, const std::optional<Int>& chain_k,
                        const std::optional<bool>& integrally_closed,
                        const Int& e1);

// e1 <= C(e0-n, 2) with n = floor((lambda(R/Ibar)-1)/t), t the essential rank
BoundResult essential_upper(const Int& e0,
                            const std::optional<Int>& closure_colength,
                            const std::optional<Int>& t, const Int& e1);

// e1 <= C(e0-k, 2) when I is contained in m^k with k >= 2
BoundResult elias_upper(const Int& e0, const std::optional<Int>& ord,
                        const Int& e1);

// e1 <= C(e0,2) - C(b,2) - lambda(R/I) + 1 with b = mu(I) - d
BoundResult rvv_upper(const Int& e0, const std::optional<Int>& mu, const Int& d,
                      const Int& colength, const Int& e1);

// Every bound, applicable or not, in a fixed order. Violations are reported,
// never thrown: a violated bound means an engine bug or a counterexample.
std::vector<BoundResult> evaluate_all(const BoundInputs& in);

// Lower bound on the essential rank:
// t >= 2(lambda(R/Ibar)-1) / (2 e0 - 1 - sqrt(8 e1 + 1)).
// The value a/(b - sqrt(disc)) is kept exact as (a*b + a*sqrt(disc))/q with
// q = b^2 - disc; comparisons square out the radical, never float.
struct RankLowerBound {
  bool applicable = false;
  std::string reason;
  Int a = 0, b = 0, disc = 0, q = 0;
  Int ceiling = 0;     // least integer >= the value
  bool exact = false;  // disc is a perfect square (the value is rational)

  // sign of (value - x), exact
  int compare(const Rat& x) const;
};

RankLowerBound essential_rank_lower(const Int& e0, const Int& e1,
                                    const Int& closure_colength);

}  // namespace hilbound::bounds
