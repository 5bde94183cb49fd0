#include "hilbound/numsemi.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace hilbound::numsemi {

namespace {

std::vector<long long> minimalize(const NumericalSemigroup& ring,
                                  std::vector<long long> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<long long> kept;
  for (long long g : gens) {
    bool dominated = false;
    for (long long k : kept) {
      if (ring.contains(g - k)) {  // k < g here, so g - k > 0
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(g);
  }
  return kept;
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring()))
    throw input_error("ideals live in different semigroup rings");
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<long long> generators)
    : gens_(std::move(generators)) {
  if (gens_.empty()) throw input_error("empty generator list");
  for (long long g : gens_)
    if (g <= 0) throw input_error("semigroup generators must be positive");
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());

  long long g = 0;
  for (long long v : gens_) g = std::gcd(g, v);
  if (g != 1)
    throw input_error("not a numerical semigroup: gcd of generators is " +
                      std::to_string(g));

  // Membership sieve up to max^2 + max. The Frobenius number lies below
  // (min-1)(max-1), so the conductor is certified inside the window.
  long long gmax = gens_.back();
  long long bound = gmax * gmax + gmax;
  sieve_.assign(static_cast<std::size_t>(bound) + 1, false);
  sieve_[0] = true;
  for (long long n = 1; n <= bound; ++n) {
    for (long long gen : gens_) {
      if (n >= gen && sieve_[static_cast<std::size_t>(n - gen)]) {
        sieve_[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }

  long long frobenius = -1;
  for (long long n = bound; n >= 0; --n) {
    if (!sieve_[static_cast<std::size_t>(n)]) {
      frobenius = n;
      break;
    }
  }
  conductor_ = frobenius + 1;
  if (frobenius + gens_.front() >= bound)
    throw internal_error("semigroup sieve window failed to certify the conductor");

  for (long long n = 1; n < conductor_; ++n)
    if (!sieve_[static_cast<std::size_t>(n)]) gaps_.push_back(n);
}

bool NumericalSemigroup::contains(long long n) const {
  if (n < 0) throw input_error("membership query for a negative integer");
  if (n >= conductor_) return true;
  return sieve_[static_cast<std::size_t>(n)];
}

std::vector<long long> NumericalSemigroup::elements_in(long long lo,
                                                       long long hi) const {
  std::vector<long long> out;
  for (long long n = std::max(lo, 0LL); n < hi; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

MonomialIdeal::MonomialIdeal(const NumericalSemigroup& ring,
                             std::vector<long long> gens)
    : ring_(&ring) {
  if (gens.empty()) throw input_error("ideal needs at least one generator");
  for (long long g : gens) {
    if (g < 0 || !ring.contains(g))
      throw input_error("generator not in ring: t^" + std::to_string(g));
  }
  min_gens_ = minimalize(ring, std::move(gens));
}

bool MonomialIdeal::contains_exponent(long long e) const {
  if (e < 0) return false;
  for (long long g : min_gens_) {
    if (g > e) break;  // sorted
    if (ring_->contains(e - g)) return true;
  }
  return false;
}

MonomialIdeal maximal_ideal(const NumericalSemigroup& ring) {
  return MonomialIdeal(ring, ring.generators());
}

MonomialIdeal ideal_mul(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<long long> sums;
  sums.reserve(a.min_gens().size() * b.min_gens().size());
  for (long long x : a.min_gens())
    for (long long y : b.min_gens()) sums.push_back(x + y);
  return MonomialIdeal(a.ring(), std::move(sums));
}

MonomialIdeal ideal_pow(const MonomialIdeal& ideal, long long n) {
  if (n < 1) throw input_error("ideal power requires n >= 1");
  MonomialIdeal acc = ideal;
  for (long long i = 1; i < n; ++i) acc = ideal_mul(acc, ideal);
  return acc;
}

std::vector<MonomialIdeal> ideal_powers(const MonomialIdeal& ideal, long long n) {
  if (n < 1) throw input_error("ideal power requires n >= 1");
  std::vector<MonomialIdeal> powers;
  powers.reserve(static_cast<std::size_t>(n));
  powers.push_back(ideal);
  for (long long i = 1; i < n; ++i)
    powers.push_back(ideal_mul(powers.back(), ideal));
  return powers;
}

long long colength(const MonomialIdeal& ideal) {
  // E(I) contains every s >= v0 + conductor, so the complement lives below.
  long long bound = ideal.min_valuation() + ideal.ring().conductor();
  long long count = 0;
  for (long long s = 0; s < bound; ++s)
    if (ideal.ring().contains(s) && !ideal.contains_exponent(s)) ++count;
  return count;
}

MonomialIdeal valuation_ideal(const NumericalSemigroup& ring, long long s) {
  if (!ring.contains(s))
    throw input_error("valuation ideal level must be a semigroup member");
  // generators beyond s + conductor are dominated by s itself
  auto gens = ring.elements_in(s, s + ring.conductor() + 1);
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal) {
  return valuation_ideal(ideal.ring(), ideal.min_valuation());
}

long long multiplicity_e0(const MonomialIdeal& ideal) {
  return ideal.min_valuation();
}

std::vector<MonomialIdeal> valuation_chain(const MonomialIdeal& ideal) {
  const auto& ring = ideal.ring();
  long long v0 = ideal.min_valuation();
  if (v0 <= ring.multiplicity()) return {};  // Ibar is m (or the unit ideal)
  std::vector<MonomialIdeal> chain;
  for (long long s : ring.elements_in(1, v0 + 1))
    chain.push_back(valuation_ideal(ring, s));
  return chain;
}

long long mu(const MonomialIdeal& ideal) {
  return static_cast<long long>(ideal.min_gens().size());
}

long long ord_in_m(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw input_error("ord is undefined for the unit ideal");
  MonomialIdeal m = maximal_ideal(ideal.ring());
  MonomialIdeal mk = m;
  long long k = 0;
  while (true) {
    bool inside = true;
    for (long long g : ideal.min_gens()) {
      if (!mk.contains_exponent(g)) {
        inside = false;
        break;
      }
    }
    if (!inside) return k;
    ++k;
    mk = ideal_mul(mk, m);  // loop ends once k * multiplicity exceeds v0
  }
}

std::vector<long long> hilbert_sequence(const MonomialIdeal& ideal,
                                        long long window) {
  if (window < 1) throw input_error("window must be >= 1");
  std::vector<long long> seq;
  seq.reserve(static_cast<std::size_t>(window));
  for (const auto& p : ideal_powers(ideal, window)) seq.push_back(colength(p));
  return seq;
}

namespace {

// Decides I^{n+1} subseteq x I^n over the field K, where x is supported on
// the minimal generators of I with coefficients `xcoef`. The span of
// { x t^h : h in E(I^n) } is triangular: column h has its lowest entry at
// h + v0 with the (nonzero) coefficient of t^{v0}, so membership reduces to
// greedy elimination on the truncated residual.
template <class K>
bool power_contained_in_x(const K& field,
                          const std::vector<std::pair<long long, typename K::Elem>>& x,
                          const MonomialIdeal& ideal_n,   // I^n (or the ring for n=0)
                          const MonomialIdeal& ideal_n1,  // I^{n+1}
                          const NumericalSemigroup& ring) {
  long long v0 = x.front().first;
  long long bound = v0 + ideal_n.min_valuation() + ring.conductor();
  const typename K::Elem pivot_inv = field.inv(x.front().second);

  // E(I^n) membership table for shifts h in [0, bound)
  std::vector<char> in_en(static_cast<std::size_t>(bound), 0);
  for (long long h = 0; h < bound; ++h)
    if (ideal_n.contains_exponent(h)) in_en[static_cast<std::size_t>(h)] = 1;

  for (long long target : ideal_n1.min_gens()) {
    if (target >= bound)
      throw internal_error("minimal generator beyond the truncation bound");
    TruncatedSeries<K> residual(field, ring, bound);
    residual.set_coeff(target, field.one());
    long long cursor = target;
    while (true) {
      long long s = -1;
      for (long long i = cursor; i < bound; ++i) {
        if (!field.is_zero(residual.coeff(i))) {
          s = i;
          break;
        }
      }
      if (s < 0) break;  // residual vanished below the bound: member
      long long h = s - v0;
      if (h < 0 || !in_en[static_cast<std::size_t>(h)]) return false;
      auto q = field.neg(field.mul(residual.coeff(s), pivot_inv));
      residual.add_scaled_shifted(x, h, q);
      cursor = s + 1;  // the pivot entry is now zero
    }
  }
  return true;
}

template <class K>
typename K::Elem random_coefficient(const K& field, std::mt19937_64& rng,
                                    bool force_nonzero);

template <>
PrimeField::Elem random_coefficient<PrimeField>(const PrimeField& field,
                                                std::mt19937_64& rng,
                                                bool force_nonzero) {
  std::uniform_int_distribution<std::uint32_t> dist(force_nonzero ? 1 : 0,
                                                    field.modulus() - 1);
  return dist(rng);
}

template <>
RationalField::Elem random_coefficient<RationalField>(const RationalField& field,
                                                      std::mt19937_64& rng,
                                                      bool /*force_nonzero*/) {
  // small random integers in [1, 1000]: never zero
  std::uniform_int_distribution<long> dist(1, 1000);
  return field.from_long(dist(rng));
}

template <class K>
long long reduction_number_trials(const K& field, const MonomialIdeal& ideal,
                                  const std::vector<MonomialIdeal>& powers,
                                  long long trials, long long max_power,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& ring = ideal.ring();
  const MonomialIdeal unit(ring, {0});  // I^0
  long long best = -1;
  for (long long trial = 0; trial < trials; ++trial) {
    std::vector<std::pair<long long, typename K::Elem>> x;
    for (std::size_t i = 0; i < ideal.min_gens().size(); ++i)
      x.emplace_back(ideal.min_gens()[i],
                     random_coefficient(field, rng, i == 0));
    for (long long n = 0; n <= max_power; ++n) {
      if (best >= 0 && n >= best) break;  // cannot improve the minimum
      const MonomialIdeal& in_pow =
          n == 0 ? unit : powers[static_cast<std::size_t>(n - 1)];
      const MonomialIdeal& in1_pow = powers[static_cast<std::size_t>(n)];
      if (power_contained_in_x(field, x, in_pow, in1_pow, ring)) {
        best = n;
        break;
      }
    }
  }
  return best;
}

}  // namespace

ReductionResult reduction_number(const MonomialIdeal& ideal,
                                 const ReductionOptions& opts) {
  if (opts.trials < 1) throw input_error("trials must be >= 1");
  if (opts.max_power < 1) throw input_error("max_power must be >= 1");
  if (ideal.is_unit()) throw input_error("reduction number of the unit ideal");

  auto powers = ideal_powers(ideal, opts.max_power + 4);

  long long r;
  if (opts.field.is_prime_field()) {
    PrimeField field(opts.field.modulus);
    r = reduction_number_trials(field, ideal, powers, opts.trials,
                                opts.max_power, opts.seed);
  } else {
    RationalField field;
    r = reduction_number_trials(field, ideal, powers, opts.trials,
                                opts.max_power, opts.seed);
  }
  if (r < 0)
    throw window_error("reduction number not found within window (max_power=" +
                       std::to_string(opts.max_power) + ")");

  // Cross-check against the Hilbert identity: lambda(R/I^n) = e0 n - e1 from
  // n = r+1 on, with e0 = v0. Failure means the linear algebra and the
  // colength arithmetic disagree.
  long long e0 = ideal.min_valuation();
  long long lam[4];
  for (long long i = 0; i < 4; ++i)
    lam[i] = colength(powers[static_cast<std::size_t>(r + i)]);  // lambda(R/I^{r+1+i})
  if (lam[1] - lam[0] != e0 || lam[2] - lam[1] != e0 || lam[3] - lam[2] != e0)
    throw internal_error(
        "reduction number inconsistent with e1 = (r+1)e0 - lambda(R/I^{r+1})");

  ReductionResult result;
  result.r = r;
  result.probabilistic = !(r == 0 || (r == 1 && mu(ideal) >= 2));
  return result;
}

}  // namespace hilbound::numsemi
