#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hilbound/errors.hpp"
#include "hilbound/field.hpp"

namespace hilbound::numsemi {

// Additive submonoid of N with finite complement, given by generators with
// gcd 1. Combinatorial stand-in for the local ring k[[t^a1,...,t^am]], whose
// integral closure is k[[t]] (single branch, essential rank 1).
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<long long> generators);

  const std::vector<long long>& generators() const { return gens_; }
  // least c such that every n >= c is a member
  long long conductor() const { return conductor_; }
  const std::vector<long long>& gaps() const { return gaps_; }
  long long genus() const { return static_cast<long long>(gaps_.size()); }
  // smallest nonzero member (= multiplicity of the semigroup ring)
  long long multiplicity() const { return gens_.front(); }

  bool contains(long long n) const;

  // members of S in [lo, hi)
  std::vector<long long> elements_in(long long lo, long long hi) const;

  bool operator==(const NumericalSemigroup& other) const {
    return gens_ == other.gens_;
  }

 private:
  std::vector<long long> gens_;   // sorted, deduplicated
  long long conductor_ = 0;
  std::vector<long long> gaps_;
  std::vector<bool> sieve_;       // membership on [0, sieve_.size())
};

// Monomial ideal of the semigroup ring, stored as its minimal generator
// valuations: E(I) = union of (g + S) over g in min_gens.
class MonomialIdeal {
 public:
  MonomialIdeal(const NumericalSemigroup& ring, std::vector<long long> gens);

  const NumericalSemigroup& ring() const { return *ring_; }
  const std::vector<long long>& min_gens() const { return min_gens_; }
  // v0 = min valuation of the ideal
  long long min_valuation() const { return min_gens_.front(); }
  bool is_unit() const { return min_gens_.front() == 0; }

  // e in E(I)?
  bool contains_exponent(long long e) const;

  bool operator==(const MonomialIdeal& other) const {
    return *ring_ == *other.ring_ && min_gens_ == other.min_gens_;
  }

 private:
  const NumericalSemigroup* ring_;
  std::vector<long long> min_gens_;  // sorted, pairwise incomparable
};

// the maximal ideal m = (t^a1, ..., t^am)
MonomialIdeal maximal_ideal(const NumericalSemigroup& ring);

MonomialIdeal ideal_mul(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_pow(const MonomialIdeal& ideal, long long n);
// [I^1, ..., I^n], each re-minimalized
std::vector<MonomialIdeal> ideal_powers(const MonomialIdeal& ideal, long long n);

// lambda(R/I) = #{ s in S : s not in E(I) }
long long colength(const MonomialIdeal& ideal);

// Ibar = { s in S : s >= v0 }, the valuation ideal at level v0. Idempotent.
MonomialIdeal integral_closure(const MonomialIdeal& ideal);

// valuation ideal V_s = { x : v(x) >= s }, for s a member of S
MonomialIdeal valuation_ideal(const NumericalSemigroup& ring, long long s);

// e0(I) = lambda(R/xR) = v0 for any minimal reduction x
long long multiplicity_e0(const MonomialIdeal& ideal);

// The chain of valuation ideals V_s, s in S with 0 < s <= v0, descending
// from m down to Ibar. Empty when Ibar is m (or the unit ideal).
std::vector<MonomialIdeal> valuation_chain(const MonomialIdeal& ideal);

// minimal number of generators
long long mu(const MonomialIdeal& ideal);

// largest k with E(I) contained in E(m^k); input error on the unit ideal
long long ord_in_m(const MonomialIdeal& ideal);

// [lambda(R/I^1), ..., lambda(R/I^N)]
std::vector<long long> hilbert_sequence(const MonomialIdeal& ideal, long long window);

struct ReductionOptions {
  long long trials = 5;
  std::uint64_t seed = 0xC0FFEE;
  FieldTag field = FieldTag::prime(kDefaultPrime);
  long long max_power = 16;
};

struct ReductionResult {
  long long r = 0;
  // true unless the value is forced (r=0 needs I principal; r=1 with mu>=2
  // cannot be beaten by any other reduction)
  bool probabilistic = true;
};

// Least n with I^{n+1} = x I^n for a random principal reduction
// x = sum c_g t^g over the minimal generators (coefficient of the minimal
// valuation forced nonzero), minimized over trials. Membership is decided by
// exact linear algebra over the chosen field on series truncated at
// v(x) + min E(I^n) + conductor; the tail above the bound is absorbed
// because any ideal J contains t^{minval(J)+conductor} k[[t]].
// Cross-checks e1 = (r+1)e0 - lambda(R/I^{r+1}) before returning.
ReductionResult reduction_number(const MonomialIdeal& ideal,
                                 const ReductionOptions& opts = {});

// Power series truncated at `bound`, supported on semigroup exponents in
// [0, bound). Carrier for the generic reduction elements and the residuals
// of the membership test.
template <class F>
class TruncatedSeries {
 public:
  using Elem = typename F::Elem;

  TruncatedSeries(const F& field, const NumericalSemigroup& ring, long long bound)
      : field_(&field), ring_(&ring), coeffs_(static_cast<std::size_t>(bound)) {
    if (bound < 0) throw input_error("negative truncation bound");
    for (auto& c : coeffs_) c = field.zero();
  }

  long long bound() const { return static_cast<long long>(coeffs_.size()); }

  const Elem& coeff(long long e) const { return coeffs_.at(index(e)); }

  void set_coeff(long long e, Elem v) {
    if (!ring_->contains(e))
      throw input_error("exponent " + std::to_string(e) + " not in the semigroup");
    coeffs_.at(index(e)) = std::move(v);
  }

  // this += c * other, componentwise
  void add_scaled(const TruncatedSeries& other, const Elem& c) {
    long long n = std::min(bound(), other.bound());
    for (long long i = 0; i < n; ++i)
      coeffs_[i] = field_->add(coeffs_[i], field_->mul(c, other.coeffs_[i]));
  }

  // this += c * t^shift * (sparse series given as exponent/coefficient pairs);
  // contributions at or beyond the bound are dropped
  void add_scaled_shifted(const std::vector<std::pair<long long, Elem>>& sparse,
                          long long shift, const Elem& c) {
    for (const auto& [e, v] : sparse) {
      long long idx = e + shift;
      if (idx < bound())
        coeffs_[static_cast<std::size_t>(idx)] =
            field_->add(coeffs_[static_cast<std::size_t>(idx)], field_->mul(c, v));
    }
  }

  // multiplication by t^g: shifts indices, drops overflow beyond the bound
  TruncatedSeries shifted(long long g) const {
    if (g < 0 || !ring_->contains(g))
      throw input_error("shift exponent not in the semigroup");
    TruncatedSeries out(*field_, *ring_, bound());
    for (long long i = 0; i + g < bound(); ++i)
      out.coeffs_[static_cast<std::size_t>(i + g)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
  }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!field_->is_zero(c)) return false;
    return true;
  }

  // -1 when zero
  long long lowest_nonzero() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!field_->is_zero(coeffs_[i])) return static_cast<long long>(i);
    return -1;
  }

 private:
  std::size_t index(long long e) const {
    if (e < 0 || e >= bound()) throw input_error("exponent outside truncation bound");
    return static_cast<std::size_t>(e);
  }

  const F* field_;
  const NumericalSemigroup* ring_;
  std::vector<Elem> coeffs_;
};

}  // namespace hilbound::numsemi
