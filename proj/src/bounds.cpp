#include "hilbound/bounds.hpp"

namespace hilbound::bounds {

namespace {

BoundResult inapplicable(std::string name, BoundKind kind, std::string reason) {
  BoundResult b;
  b.name = std::move(name);
  b.kind = kind;
  b.applicable = false;
  b.reason = std::move(reason);
  return b;
}

BoundResult evaluated(std::string name, BoundKind kind, Int rhs, const Int& e1,
                      bool strict_required = false) {
  BoundResult b;
  b.name = std::move(name);
  b.kind = kind;
  b.rhs = std::move(rhs);
  b.strict_required = strict_required;
  b.margin = kind == BoundKind::lower ? Int(e1 - b.rhs) : Int(b.rhs - e1);
  b.holds = strict_required ? b.margin > 0 : b.margin >= 0;
  b.sharp = b.margin == 0;
  return b;
}

}  // namespace

Int binom2(const Int& n) {
  if (n < 0) throw input_error("binom2 of a negative argument");
  if (n < 2) return 0;
  return n * (n - 1) / 2;
}

BoundResult northcott_lower(const Int& e0, const Int& colength, const Int& e1) {
  return evaluated("northcott", BoundKind::lower, e0 - colength, e1);
}

BoundResult rossi_lower(const Int& e0, const Int& colength,
                        const std::optional<Int>& r, const Int& d,
                        const Int& e1) {
  if (d > 2)
    return inapplicable("rossi", BoundKind::lower, "requires dimension <= 2");
  if (!r)
    return inapplicable("rossi", BoundKind::lower, "reduction number unavailable");
  return evaluated("rossi", BoundKind::lower, e0 - colength + *r - 1, e1);
}

BoundResult chain_upper(const Int& e0, const std::optional<Int>& chain_k,
                        const std::optional<bool>& integrally_closed,
                        const Int& e1) {
  if (!chain_k)
    return inapplicable("chain", BoundKind::upper, "no chain parameter k");
  if (*chain_k < 1)
    return inapplicable("chain", BoundKind::upper, "chain parameter k < 1");
  if (e0 - *chain_k < 0)
    return inapplicable("chain", BoundKind::upper, "bound inapplicable (e0 < k)");
  bool strict = integrally_closed.has_value() && !*integrally_closed;
  return evaluated("chain", BoundKind::upper, binom2(e0 - *chain_k), e1, strict);
}

BoundResult essential_upper(const Int& e0,
                            const std::optional<Int>& closure_colength,
                            const std::optional<Int>& t, const Int& e1) {
  if (!t)
    return inapplicable("essential", BoundKind::upper,
                        "essential rank unavailable");
  if (*t < 1)
    return inapplicable("essential", BoundKind::upper, "essential rank < 1");
  if (!closure_colength)
    return inapplicable("essential", BoundKind::upper,
                        "closure colength unavailable");
  if (*closure_colength < 1)
    return inapplicable("essential", BoundKind::upper,
                        "closure colength < 1 (unit ideal)");
  Int n = (*closure_colength - 1) / *t;  // floor: both operands non-negative
  if (e0 - n < 0)
    return inapplicable("essential", BoundKind::upper, "bound inapplicable (e0 < n)");
  return evaluated("essential", BoundKind::upper, binom2(e0 - n), e1);
}

BoundResult elias_upper(const Int& e0, const std::optional<Int>& ord,
                        const Int& e1) {
  if (!ord)
    return inapplicable("elias", BoundKind::upper, "ord unavailable");
  if (*ord < 2)
    return inapplicable("elias", BoundKind::upper,
                        "requires I inside m^k with k >= 2");
  if (e0 - *ord < 0)
    return inapplicable("elias", BoundKind::upper, "bound inapplicable (e0 < k)");
  return evaluated("elias", BoundKind::upper, binom2(e0 - *ord), e1);
}

BoundResult rvv_upper(const Int& e0, const std::optional<Int>& mu, const Int& d,
                      const Int& colength, const Int& e1) {
  if (!mu)
    return inapplicable("rvv", BoundKind::upper, "mu unavailable");
  if (*mu < d)
    return inapplicable("rvv", BoundKind::upper, "mu < d");
  Int rhs = binom2(e0) - binom2(*mu - d) - colength + 1;
  return evaluated("rvv", BoundKind::upper, std::move(rhs), e1);
}

std::vector<BoundResult> evaluate_all(const BoundInputs& in) {
  std::optional<bool> closed = in.integrally_closed;
  if (!closed && in.closure_colength)
    closed = (in.colength == *in.closure_colength);

  std::vector<BoundResult> out;
  out.push_back(northcott_lower(in.e0, in.colength, in.e1));
  out.push_back(rossi_lower(in.e0, in.colength, in.r, in.d, in.e1));
  out.push_back(chain_upper(in.e0, in.chain_k, closed, in.e1));
  out.push_back(essential_upper(in.e0, in.closure_colength, in.t, in.e1));
  out.push_back(elias_upper(in.e0, in.ord, in.e1));
  out.push_back(rvv_upper(in.e0, in.mu, in.d, in.colength, in.e1));
  return out;
}

int RankLowerBound::compare(const Rat& x) const {
  // value = (a*b + a*sqrt(disc))/q with q > 0; sign of value - x equals
  // sign of a*s*sqrt(disc) - (p*q - a*b*s) where x = p/s, s > 0.
  Int p(x.get_num()), s(x.get_den());
  Int lhs = a * s;              // multiplies sqrt(disc), non-negative
  Int rhs = p * q - a * b * s;  // the rational side
  if (lhs == 0) return rhs > 0 ? -1 : (rhs == 0 ? 0 : 1);
  if (rhs < 0) return 1;
  Int l2 = lhs * lhs * disc, r2 = rhs * rhs;
  return l2 > r2 ? 1 : (l2 == r2 ? 0 : -1);
}

RankLowerBound essential_rank_lower(const Int& e0, const Int& e1,
                                    const Int& closure_colength) {
  RankLowerBound out;
  if (closure_colength < 1) {
    out.reason = "closure colength < 1";
    return out;
  }
  out.a = 2 * (closure_colength - 1);
  out.b = 2 * e0 - 1;
  out.disc = 8 * e1 + 1;
  out.q = out.b * out.b - out.disc;
  if (out.b <= 0 || out.q <= 0) {
    out.reason = "denominator 2e0 - 1 - sqrt(8e1 + 1) is not positive";
    return out;
  }
  out.applicable = true;

  // ceiling of (a*b + a*sqrt(disc))/q without leaving the integers
  Int a2d = out.a * out.a * out.disc;
  Int root;
  mpz_sqrt(root.get_mpz_t(), a2d.get_mpz_t());
  out.exact = (root * root == a2d);
  Int u = out.a * out.b + root;
  Int x = out.exact ? u : Int(u + 1);  // strict ceiling for irrational values
  mpz_cdiv_q(out.ceiling.get_mpz_t(), x.get_mpz_t(), out.q.get_mpz_t());
  return out;
}

}  // namespace hilbound::bounds
