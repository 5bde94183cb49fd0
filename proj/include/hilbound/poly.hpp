#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hilbound/errors.hpp"
#include "hilbound/field.hpp"

namespace hilbound::polyring {

// one exponent per variable
using Exponents = std::vector<unsigned>;

struct Monomial {
  Exponents e;

  unsigned degree() const {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (unsigned x : e)
      if (x) return false;
    return true;
  }
  static Monomial one(std::size_t nvars) { return Monomial{Exponents(nvars, 0)}; }
  bool operator==(const Monomial&) const = default;
};

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
  return m;
}

// b / a, requires a | b
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial m = b;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] -= a.e[i];
  return m;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
  return m;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

enum class OrderKind { grevlex, grlex };

// Degree-compatible total order; degree compatibility is what makes
// staircase counting compute lengths of the graded quotients.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<unsigned> priority)
      : kind_(kind), priority_(std::move(priority)) {}

  static MonomialOrder grevlex(std::size_t nvars) {
    return MonomialOrder(OrderKind::grevlex, identity(nvars));
  }
  static MonomialOrder grlex(std::size_t nvars) {
    return MonomialOrder(OrderKind::grlex, identity(nvars));
  }

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return priority_.size(); }

  // <0 if a < b, 0 if equal, >0 if a > b
  int compare(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    if (kind_ == OrderKind::grlex) {
      for (unsigned v : priority_) {
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
      }
      return 0;
    }
    // grevlex: the smaller exponent in the least significant variable wins
    for (std::size_t i = priority_.size(); i-- > 0;) {
      unsigned v = priority_[i];
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    }
    return 0;
  }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  static std::vector<unsigned> identity(std::size_t n) {
    std::vector<unsigned> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<unsigned>(i);
    return p;
  }
  OrderKind kind_;
  std::vector<unsigned> priority_;  // variable indices, highest first
};

template <class F>
struct Term {
  Monomial mono;
  typename F::Elem coef;
};

// Exact multivariate polynomial; terms strictly descending under the active
// order, no zero coefficients stored.
template <class F>
struct Polynomial {
  std::vector<Term<F>> terms;

  bool is_zero() const { return terms.empty(); }
  const Term<F>& leading() const { return terms.front(); }
};

template <class F>
Polynomial<F> make_poly(const F& K, const MonomialOrder& ord,
                        std::vector<Term<F>> raw) {
  std::sort(raw.begin(), raw.end(), [&](const Term<F>& a, const Term<F>& b) {
    return ord.compare(a.mono, b.mono) > 0;
  });
  Polynomial<F> p;
  for (auto& t : raw) {
    if (!p.terms.empty() && p.terms.back().mono == t.mono)
      p.terms.back().coef = K.add(p.terms.back().coef, t.coef);
    else
      p.terms.push_back(std::move(t));
  }
  std::erase_if(p.terms, [&](const Term<F>& t) { return K.is_zero(t.coef); });
  return p;
}

// a + c * t^shift * b
template <class F>
Polynomial<F> add_scaled(const F& K, const MonomialOrder& ord,
                         const Polynomial<F>& a, const Polynomial<F>& b,
                         const typename F::Elem& c, const Monomial& shift) {
  Polynomial<F> out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      out.terms.push_back(a.terms[i++]);
      continue;
    }
    Monomial bm = mono_mul(b.terms[j].mono, shift);
    if (i == a.terms.size()) {
      auto v = K.mul(c, b.terms[j].coef);
      if (!K.is_zero(v)) out.terms.push_back({std::move(bm), std::move(v)});
      ++j;
      continue;
    }
    int cmp = ord.compare(a.terms[i].mono, bm);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      auto v = K.mul(c, b.terms[j].coef);
      if (!K.is_zero(v)) out.terms.push_back({std::move(bm), std::move(v)});
      ++j;
    } else {
      auto v = K.add(a.terms[i].coef, K.mul(c, b.terms[j].coef));
      if (!K.is_zero(v)) out.terms.push_back({std::move(bm), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
Polynomial<F> add(const F& K, const MonomialOrder& ord, const Polynomial<F>& a,
                  const Polynomial<F>& b) {
  return add_scaled(K, ord, a, b, K.one(), Monomial::one(ord.nvars()));
}

template <class F>
Polynomial<F> scale(const F& K, const Polynomial<F>& p,
                    const typename F::Elem& c) {
  Polynomial<F> out;
  if (K.is_zero(c)) return out;
  out.terms = p.terms;
  for (auto& t : out.terms) t.coef = K.mul(t.coef, c);
  return out;
}

template <class F>
Polynomial<F> mul(const F& K, const MonomialOrder& ord, const Polynomial<F>& a,
                  const Polynomial<F>& b) {
  Polynomial<F> acc;
  for (const auto& t : a.terms)
    acc = add_scaled(K, ord, acc, b, t.coef, t.mono);
  return acc;
}

// Scale to the canonical representative: monic over F_p; over Q, primitive
// integer coefficients with positive leading coefficient (keeps bignum sizes
// bounded during basis computations).
template <class F>
void canonicalize_scale(const F& K, Polynomial<F>& p) {
  if (p.is_zero()) return;
  if constexpr (std::is_same_v<F, RationalField>) {
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& t : p.terms) {
      num_gcd = gcd(num_gcd, Int(t.coef.get_num()));
      den_lcm = lcm(den_lcm, Int(t.coef.get_den()));
    }
    Rat factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (sgn(p.leading().coef) < 0) factor = -factor;
    for (auto& t : p.terms) t.coef *= factor;
  } else {
    auto c = K.inv(p.leading().coef);
    for (auto& t : p.terms) t.coef = K.mul(t.coef, c);
  }
}

template <class F>
void make_monic(const F& K, Polynomial<F>& p) {
  if (p.is_zero()) return;
  auto c = K.inv(p.leading().coef);
  for (auto& t : p.terms) t.coef = K.mul(t.coef, c);
}

// Full normal form: no term of the remainder is divisible by any leading
// term of the basis. Zero iff p lies in the ideal the basis generates
// (when the basis is a Groebner basis).
template <class F>
Polynomial<F> normal_form(const F& K, const MonomialOrder& ord,
                          Polynomial<F> h,
                          std::span<const Polynomial<F>> basis) {
  std::vector<Term<F>> remainder;
  while (!h.is_zero()) {
    const Term<F>& lt = h.leading();
    const Polynomial<F>* reducer = nullptr;
    for (const auto& g : basis) {
      if (!g.is_zero() && divides(g.leading().mono, lt.mono)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      auto c = K.neg(K.div(lt.coef, reducer->leading().coef));
      h = add_scaled(K, ord, h, *reducer, c,
                     mono_div(lt.mono, reducer->leading().mono));
    } else {
      remainder.push_back(lt);
      h.terms.erase(h.terms.begin());
    }
  }
  Polynomial<F> r;
  r.terms = std::move(remainder);  // already descending
  return r;
}

template <class F>
Polynomial<F> s_polynomial(const F& K, const MonomialOrder& ord,
                           const Polynomial<F>& f, const Polynomial<F>& g) {
  Monomial l = mono_lcm(f.leading().mono, g.leading().mono);
  auto cf = K.inv(f.leading().coef);
  auto cg = K.neg(K.inv(g.leading().coef));
  Polynomial<F> s = add_scaled(K, ord, Polynomial<F>{}, f, cf,
                               mono_div(l, f.leading().mono));
  return add_scaled(K, ord, s, g, cg, mono_div(l, g.leading().mono));
}

template <class F>
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial<F>> polys;  // monic, sorted by leading term descending
  bool reduced = false;
};

template <class F>
Polynomial<F> normal_form(const F& K, const GroebnerBasis<F>& G,
                          const Polynomial<F>& p) {
  return normal_form(K, G.order, p,
                     std::span<const Polynomial<F>>(G.polys));
}

// Buchberger with normal (degree-first) pair selection and the two classical
// pair-elimination criteria, followed by full inter-reduction. Returns the
// unique reduced basis for the order.
template <class F>
GroebnerBasis<F> buchberger(const F& K, const MonomialOrder& ord,
                            const std::vector<Polynomial<F>>& gens) {
  if (gens.empty()) throw input_error("buchberger needs at least one generator");
  std::vector<Polynomial<F>> basis;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial<F> c = g;
    canonicalize_scale(K, c);
    basis.push_back(std::move(c));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  std::vector<std::vector<char>> done(basis.size());
  for (auto& row : done) row.assign(basis.size(), 0);

  auto push_pairs_for = [&](std::size_t t) {
    for (auto& row : done) row.resize(t + 1, 0);
    done.emplace_back(t + 1, 0);
    for (std::size_t i = 0; i < t; ++i)
      pending.push_back(
          {i, t, mono_lcm(basis[i].leading().mono, basis[t].leading().mono)});
  };
  for (std::size_t j = 1; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      pending.push_back(
          {i, j, mono_lcm(basis[i].leading().mono, basis[j].leading().mono)});

  while (!pending.empty()) {
    // normal selection: smallest lcm degree, ties by the order
    std::size_t pick = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const auto &a = pending[k], &b = pending[pick];
      if (a.lcm.degree() < b.lcm.degree() ||
          (a.lcm.degree() == b.lcm.degree() && ord.less(a.lcm, b.lcm)))
        pick = k;
    }
    Pair pr = pending[pick];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    done[pr.j][pr.i] = done[pr.i][pr.j] = 1;

    // product criterion
    if (coprime(basis[pr.i].leading().mono, basis[pr.j].leading().mono))
      continue;
    // chain criterion
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (done[std::max(pr.i, k)][std::min(pr.i, k)] &&
          done[std::max(pr.j, k)][std::min(pr.j, k)] &&
          divides(basis[k].leading().mono, pr.lcm))
        skip = true;
    }
    if (skip) continue;

    Polynomial<F> s = s_polynomial(K, ord, basis[pr.i], basis[pr.j]);
    Polynomial<F> nf =
        normal_form(K, ord, std::move(s), std::span<const Polynomial<F>>(basis));
    if (!nf.is_zero()) {
      canonicalize_scale(K, nf);
      basis.push_back(std::move(nf));
      push_pairs_for(basis.size() - 1);
    }
  }

  // minimalize: drop elements whose leading term another one divides
  std::vector<Polynomial<F>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial &li = basis[i].leading().mono, &lj = basis[j].leading().mono;
      if (divides(lj, li) && (li != lj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  // inter-reduce tails to the unique reduced basis
  auto poly_equal = [&](const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t k = 0; k < a.terms.size(); ++k) {
      if (!(a.terms[k].mono == b.terms[k].mono)) return false;
      if (!K.is_zero(K.sub(a.terms[k].coef, b.terms[k].coef))) return false;
    }
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial<F>> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial<F> nf = normal_form(K, ord, minimal[i],
                                     std::span<const Polynomial<F>>(others));
      canonicalize_scale(K, nf);
      if (!poly_equal(nf, minimal[i])) {
        minimal[i] = std::move(nf);
        changed = true;
      }
    }
  }

  for (auto& g : minimal) make_monic(K, g);
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial<F>& a, const Polynomial<F>& b) {
              return ord.compare(a.leading().mono, b.leading().mono) > 0;
            });
  return GroebnerBasis<F>{ord, std::move(minimal), true};
}

// --- parsing ------------------------------------------------------------

// Grammar: poly := term (('+'|'-') term)*
//          term := [int '*']? factor ('*' factor)*
//          factor := var ['^' posint] | int
// Whitespace is ignored. Coefficients are arbitrary-precision integers.
struct RawPoly {
  std::vector<std::pair<Int, Exponents>> terms;
};
RawPoly parse_poly_text(const std::string& text,
                        const std::vector<std::string>& variables);

template <class F>
Polynomial<F> parse_poly(const F& K, const MonomialOrder& ord,
                         const std::string& text,
                         const std::vector<std::string>& variables) {
  RawPoly rp = parse_poly_text(text, variables);
  std::vector<Term<F>> raw;
  raw.reserve(rp.terms.size());
  for (auto& [coef, expo] : rp.terms)
    raw.push_back({Monomial{expo}, K.from_int(coef)});
  return make_poly(K, ord, std::move(raw));
}

// --- quotient-ring colengths ---------------------------------------------

// Number of standard monomials of the ideal (relation + gens), with the
// support-at-origin precondition checked: the reduced basis must contain a
// pure power of every variable (zero-dimensionality), and x_i^L must reduce
// to zero for L the staircase count (radical membership: the variety is the
// origin alone, so global length equals the local length).
template <class F>
long long colength_quotient(const F& K, const MonomialOrder& ord,
                            const Polynomial<F>& relation,
                            const std::vector<Polynomial<F>>& ideal_gens) {
  std::vector<Polynomial<F>> gens;
  gens.push_back(relation);
  for (const auto& g : ideal_gens) gens.push_back(g);
  GroebnerBasis<F> G = buchberger(K, ord, gens);

  std::size_t nvars = ord.nvars();
  std::vector<unsigned> box(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& g : G.polys) {
      const Monomial& lt = g.leading().mono;
      bool pure = true;
      for (std::size_t w = 0; w < nvars; ++w)
        if (w != v && lt.e[w] != 0) pure = false;
      if (pure) {
        if (!found || lt.e[v] < box[v]) box[v] = lt.e[v];
        found = true;
      }
    }
    if (!found)
      throw input_error("not zero-dimensional: no pure power of variable " +
                        std::to_string(v) + " among the leading terms");
  }

  // count monomials under the staircase
  std::vector<unsigned> idx(nvars, 0);
  long long standard_count = 0;
  while (true) {
    Monomial m{Exponents(idx.begin(), idx.end())};
    bool standard = true;
    for (const auto& g : G.polys) {
      if (divides(g.leading().mono, m)) {
        standard = false;
        break;
      }
    }
    if (standard) ++standard_count;
    // odometer
    std::size_t v = 0;
    while (v < nvars) {
      if (box[v] == 0) {
        ++v;
        continue;
      }
      if (++idx[v] < box[v]) break;
      idx[v] = 0;
      ++v;
    }
    if (v == nvars) break;
  }

  // radical check: every variable nilpotent modulo the ideal
  for (std::size_t v = 0; v < nvars; ++v) {
    Monomial m = Monomial::one(nvars);
    m.e[v] = static_cast<unsigned>(standard_count);
    Polynomial<F> p;
    p.terms.push_back({m, K.one()});
    if (!normal_form(K, G, p).is_zero())
      throw input_error("support off origin: variable " + std::to_string(v) +
                        " is not nilpotent modulo the ideal");
  }
  return standard_count;
}

// all n-fold products of the generators
template <class F>
std::vector<Polynomial<F>> ideal_pow_q(const F& K, const MonomialOrder& ord,
                                       const std::vector<Polynomial<F>>& gens,
                                       long long n) {
  if (n < 1) throw input_error("ideal power requires n >= 1");
  std::vector<Polynomial<F>> out;
  std::vector<std::size_t> choice;
  auto rec = [&](auto&& self, std::size_t from, long long left,
                 const Polynomial<F>& acc) -> void {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = from; i < gens.size(); ++i)
      self(self, i, left - 1, mul(K, ord, acc, gens[i]));
  };
  Polynomial<F> unit;
  unit.terms.push_back({Monomial::one(ord.nvars()), K.one()});
  rec(rec, 0, n, unit);
  return out;
}

template <class F>
std::vector<long long> hilbert_sequence_q(const F& K, const MonomialOrder& ord,
                                          const Polynomial<F>& relation,
                                          const std::vector<Polynomial<F>>& gens,
                                          long long window) {
  std::vector<long long> seq;
  for (long long n = 1; n <= window; ++n)
    seq.push_back(colength_quotient(K, ord, relation,
                                    ideal_pow_q(K, ord, gens, n)));
  return seq;
}

// true iff I^{r+1} is contained in (relation) + z I^r; with z in I this is
// exactly I^{r+1} = z I^r
template <class F>
bool verify_reduction(const F& K, const MonomialOrder& ord,
                      const Polynomial<F>& relation,
                      const std::vector<Polynomial<F>>& ideal_gens,
                      const Polynomial<F>& z, long long r) {
  if (r < 0) throw input_error("reduction exponent must be >= 0");
  std::vector<Polynomial<F>> side;
  side.push_back(relation);
  if (r == 0) {
    side.push_back(z);
  } else {
    for (const auto& g : ideal_pow_q(K, ord, ideal_gens, r))
      side.push_back(mul(K, ord, z, g));
  }
  GroebnerBasis<F> G = buchberger(K, ord, side);
  for (const auto& q : ideal_pow_q(K, ord, ideal_gens, r + 1))
    if (!normal_form(K, G, q).is_zero()) return false;
  return true;
}

// mu(I) = lambda(R/mI) - lambda(R/I) (Nakayama)
template <class F>
long long mu_quotient(const F& K, const MonomialOrder& ord,
                      const Polynomial<F>& relation,
                      const std::vector<Polynomial<F>>& ideal_gens) {
  std::vector<Polynomial<F>> mi;
  for (std::size_t v = 0; v < ord.nvars(); ++v) {
    Monomial xv = Monomial::one(ord.nvars());
    xv.e[v] = 1;
    Polynomial<F> var;
    var.terms.push_back({xv, K.one()});
    for (const auto& g : ideal_gens) mi.push_back(mul(K, ord, var, g));
  }
  return colength_quotient(K, ord, relation, mi) -
         colength_quotient(K, ord, relation, ideal_gens);
}

// largest k <= cap with every generator of I inside (relation) + m^k
template <class F>
long long ord_in_m_quotient(const F& K, const MonomialOrder& ord,
                            const Polynomial<F>& relation,
                            const std::vector<Polynomial<F>>& ideal_gens,
                            long long cap) {
  std::size_t nvars = ord.nvars();
  long long best = 0;
  for (long long k = 1; k <= cap; ++k) {
    // generators of m^k: all monomials of degree k
    std::vector<Polynomial<F>> side;
    side.push_back(relation);
    std::vector<unsigned> idx(nvars, 0);
    auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
      if (v + 1 == nvars) {
        Monomial m{Exponents(idx.begin(), idx.end())};
        m.e[v] = left;
        Polynomial<F> p;
        p.terms.push_back({m, K.one()});
        side.push_back(std::move(p));
        return;
      }
      for (unsigned take = 0; take <= left; ++take) {
        idx[v] = take;
        self(self, v + 1, left - take);
      }
      idx[v] = 0;
    };
    rec(rec, 0, static_cast<unsigned>(k));

    GroebnerBasis<F> G = buchberger(K, ord, side);
    bool inside = true;
    for (const auto& g : ideal_gens) {
      if (!normal_form(K, G, g).is_zero()) {
        inside = false;
        break;
      }
    }
    if (!inside) break;
    best = k;
  }
  if (best == 0) throw input_error("unit ideal: not contained in the maximal ideal");
  return best;
}

}  // namespace hilbound::polyring
