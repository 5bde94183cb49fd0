#include <doctest.h>

#include <random>

#include "hilbound/bounds.hpp"

using namespace hilbound;
using namespace hilbound::bounds;

TEST_CASE("binom2") {
  CHECK(binom2(7) == 21);
  CHECK(binom2(0) == 0);
  CHECK(binom2(1) == 0);
  CHECK(binom2(3) == 3);
  CHECK(binom2(1000000) == Int("499999500000"));
  CHECK_THROWS_AS(binom2(-1), input_error);
}

TEST_CASE("northcott") {
  auto b = northcott_lower(9, 3, 9);
  CHECK(b.rhs == 6);
  CHECK(b.holds);
  CHECK(b.margin == 3);

  auto dvr = northcott_lower(1, 1, 0);
  CHECK(dvr.rhs == 0);
  CHECK(dvr.holds);
  CHECK(dvr.sharp);

  auto ex22 = northcott_lower(5, 2, 4);
  CHECK(ex22.rhs == 3);
  CHECK(ex22.holds);
  CHECK(ex22.margin == 1);
}

TEST_CASE("rossi") {
  auto ex23 = rossi_lower(4, 2, Int(1), 1, 2);
  CHECK(ex23.rhs == 2);
  CHECK(ex23.holds);
  CHECK(ex23.sharp);

  auto dvr = rossi_lower(1, 1, Int(0), 1, 0);
  CHECK(dvr.rhs == -1);
  CHECK(dvr.holds);

  CHECK_FALSE(rossi_lower(4, 2, std::nullopt, 1, 2).applicable);
  CHECK_FALSE(rossi_lower(4, 2, Int(1), 3, 2).applicable);
}

TEST_CASE("chain") {
  auto ex22a = chain_upper(5, Int(1), true, 4);
  CHECK(ex22a.rhs == 6);
  CHECK(ex22a.holds);
  auto ex22b = chain_upper(5, Int(2), true, 4);
  CHECK(ex22b.rhs == 3);
  CHECK_FALSE(ex22b.holds);

  // e0 = k: rhs 0, holds iff e1 = 0
  auto edge = chain_upper(3, Int(3), true, 0);
  CHECK(edge.rhs == 0);
  CHECK(edge.holds);
  CHECK(edge.sharp);
  CHECK_FALSE(chain_upper(3, Int(3), true, 1).holds);

  CHECK_FALSE(chain_upper(3, Int(4), true, 0).applicable);  // e0 < k
  CHECK_FALSE(chain_upper(3, Int(0), true, 0).applicable);  // k < 1
  CHECK_FALSE(chain_upper(3, std::nullopt, true, 0).applicable);

  // strict case: margin must be positive when I is not integrally closed
  auto strict = chain_upper(5, Int(1), false, 6);
  CHECK(strict.strict_required);
  CHECK_FALSE(strict.holds);  // margin 0 is not enough
  CHECK(chain_upper(5, Int(1), false, 5).holds);
}

TEST_CASE("essential") {
  auto disc = essential_upper(9, Int(3), Int(1), 9);
  CHECK(disc.rhs == 21);
  CHECK(disc.holds);
  CHECK(disc.margin == 12);

  // I = m: closure colength 1, n = 0, rhs = binom2(e0)
  auto m = essential_upper(5, Int(1), Int(1), 4);
  CHECK(m.rhs == binom2(5));

  auto t2 = essential_upper(9, Int(3), Int(2), 9);
  CHECK(t2.rhs == 28);  // n = floor(2/2) = 1

  CHECK_FALSE(essential_upper(9, Int(3), std::nullopt, 9).applicable);
  CHECK_FALSE(essential_upper(9, std::nullopt, Int(1), 9).applicable);
}

TEST_CASE("elias") {
  // m^2 in <2,3>: e0 = 4, e1 = 1, ord = 2
  auto sq = elias_upper(4, Int(2), 1);
  CHECK(sq.rhs == 1);
  CHECK(sq.holds);
  CHECK(sq.sharp);

  CHECK_FALSE(elias_upper(4, Int(1), 1).applicable);  // hypothesis gate: k >= 2

  auto dvr3 = elias_upper(3, Int(3), 0);
  CHECK(dvr3.rhs == 0);
  CHECK(dvr3.holds);
  CHECK(dvr3.sharp);
}

TEST_CASE("rvv") {
  auto disc = rvv_upper(9, Int(4), 1, 3, 9);
  CHECK(disc.rhs == 31);
  CHECK(disc.holds);

  auto dvr = rvv_upper(1, Int(1), 1, 1, 0);
  CHECK(dvr.rhs == 0);
  CHECK(dvr.holds);
  CHECK(dvr.sharp);

  auto ex22 = rvv_upper(5, Int(2), 1, 2, 4);
  CHECK(ex22.rhs == 9);
  CHECK(ex22.holds);

  CHECK_FALSE(rvv_upper(5, Int(0), 1, 2, 4).applicable);  // mu < d
}

TEST_CASE("evaluate_all on the Discussion bundle") {
  BoundInputs in;
  in.e0 = 9;
  in.e1 = 9;
  in.colength = 3;
  in.closure_colength = Int(3);
  in.r = Int(4);
  in.t = Int(1);
  in.chain_k = Int(2);
  in.mu = Int(4);
  in.ord = Int(1);
  in.d = 1;

  auto results = evaluate_all(in);
  REQUIRE(results.size() == 6);
  for (const auto& b : results) {
    if (b.name == "northcott") CHECK(b.rhs == 6);
    if (b.name == "chain") CHECK(b.rhs == 21);
    if (b.name == "rvv") CHECK(b.rhs == 31);
    if (b.name == "elias") CHECK_FALSE(b.applicable);
    if (b.applicable) CHECK(b.holds);
  }
}

TEST_CASE("essential_rank_lower") {
  // Discussion ideal: 4/(17 - sqrt(73)) < 1, so t >= 1
  auto disc = essential_rank_lower(9, 9, 3);
  REQUIRE(disc.applicable);
  CHECK_FALSE(disc.exact);
  CHECK(disc.ceiling == 1);
  CHECK(disc.compare(Rat(1)) < 0);
  CHECK(disc.compare(Rat(4, 10)) > 0);  // value is about 0.473

  // e1 = 0: sqrt(1) = 1, the value is the rational (colength-1)/(e0-1)
  auto rational = essential_rank_lower(5, 0, 3);
  REQUIRE(rational.applicable);
  CHECK(rational.exact);
  CHECK(rational.compare(Rat(1, 2)) == 0);
  CHECK(rational.ceiling == 1);

  // denominator gate: 2e0 - 1 <= sqrt(8 e1 + 1)
  CHECK_FALSE(essential_rank_lower(2, 10, 3).applicable);
}

TEST_CASE("bound monotonicity and rank consistency on random tuples") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> e0d(1, 60), lamd(1, 20), td(1, 6);

  for (int iter = 0; iter < 400; ++iter) {
    long e0 = e0d(rng), lam = lamd(rng), t = td(rng);
    std::uniform_int_distribution<long> e1d(0, e0 * e0);
    long e1 = e1d(rng);

    // chain rhs non-increasing in k
    Int prev = -1;
    for (long k = 1; k <= e0; ++k) {
      auto b = chain_upper(e0, Int(k), true, e1);
      if (!b.applicable) break;
      if (prev >= 0) CHECK(b.rhs <= prev);
      prev = b.rhs;
    }

    // essential rhs non-increasing in closure colength, non-decreasing in t
    auto e_small = essential_upper(e0, Int(lam), Int(t), e1);
    auto e_big = essential_upper(e0, Int(lam + t), Int(t), e1);
    if (e_small.applicable && e_big.applicable) CHECK(e_big.rhs <= e_small.rhs);
    auto e_t1 = essential_upper(e0, Int(lam), Int(t), e1);
    auto e_t2 = essential_upper(e0, Int(lam), Int(t + 1), e1);
    if (e_t1.applicable && e_t2.applicable) CHECK(e_t1.rhs <= e_t2.rhs);

    // the rank lower bound never exceeds a t for which the essential bound
    // holds (contrapositive of the k >= (lambda-1)/t corollary)
    auto rank = essential_rank_lower(e0, e1, lam);
    if (rank.applicable) {
      for (long tt = 1; tt <= 8; ++tt) {
        auto ess = essential_upper(e0, Int(lam), Int(tt), e1);
        if (ess.applicable && ess.holds) CHECK(rank.ceiling <= tt);
      }
    }
  }
}

TEST_CASE("rank bound reproduces the integer boundary") {
  // with e1 = binom2(e0 - n) for n = floor((lam-1)/t), the essential bound
  // holds at t, so ceil of the rank bound stays <= t
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> e0d(2, 80), lamd(2, 25), td(1, 5);
  for (int iter = 0; iter < 50; ++iter) {
    long e0 = e0d(rng), lam = lamd(rng), t = td(rng);
    long n = (lam - 1) / t;
    if (e0 - n < 0) continue;
    Int e1 = binom2(e0 - n);
    auto rank = essential_rank_lower(e0, e1, lam);
    if (!rank.applicable) continue;
    CHECK(rank.ceiling <= t);
    // Corollary-style integer inequality: k > n forces k*t >= lam - 1 ... the
    // boundary case k = n + 1
    if (e0 - n - 1 >= 0 && e1 > binom2(e0 - n - 1))
      CHECK((n + 1) * t >= lam - 1);
  }
}
