#include <doctest.h>

#include "hilbound/hilbert.hpp"

using namespace hilbound;
using namespace hilbound::hilbert;

TEST_CASE("fit_e0_e1") {
  auto fit = fit_e0_e1({{2, 6, 11, 16, 21}, 1});
  CHECK(fit.e0 == 5);
  CHECK(fit.e1 == 4);
  CHECK(fit.stabilized_at == 2);

  auto dvr = fit_e0_e1({{1, 2, 3, 4, 5}, 1});
  CHECK(dvr.e0 == 1);
  CHECK(dvr.e1 == 0);
  CHECK(dvr.stabilized_at == 1);

  // translation-consistent: the stabilized tail re-fed with its true start
  // index gives the same pair
  auto shifted = fit_e0_e1({{6, 11, 16, 21}, 2});
  CHECK(shifted.e0 == fit.e0);
  CHECK(shifted.e1 == fit.e1);

  CHECK_THROWS_AS(fit_e0_e1({{2, 6, 11}, 1}), input_error);         // window < 4
  CHECK_THROWS_AS(fit_e0_e1({{5, 4, 6, 8, 10}, 1}), input_error);   // non-monotone
  CHECK_THROWS_AS(fit_e0_e1({{1, 2, 4, 8, 16}, 1}), window_error);  // no stable tail
  CHECK_THROWS_AS(fit_e0_e1({{1, 3, 4, 6, 7, 9}, 1}), window_error);
}

TEST_CASE("semigroup engine bundle (Discussion 3.11 ideal)") {
  numsemi::NumericalSemigroup ring({7, 8, 9, 10});
  numsemi::MonomialIdeal ideal(ring, {9, 10, 14, 15});
  EngineData eng = run_semigroup_engine(ideal);
  HilbertData data = assemble(eng);

  CHECK(data.e0 == 9);
  CHECK(data.e1 == 9);
  CHECK(data.colength == 3);
  CHECK(data.closure_colength == 3);
  CHECK(data.mu == 4);
  CHECK(data.ord == 1);
  CHECK(data.t == 1);
  CHECK(data.chain_k == 2);
  CHECK(data.d == 1);
  CHECK(data.integrally_closed == true);

  auto checks = check_identities(data, eng.seq);
  CHECK(!checks.empty());
  for (const auto& c : checks) CHECK(c.holds);

  // the e1 identity is among them with both sides equal to 9
  bool saw = false;
  for (const auto& c : checks)
    if (c.name == "e1_at_r_plus_1") {
      saw = true;
      CHECK(c.lhs == 9);
      CHECK(c.rhs == 9);
    }
  CHECK(saw);
}

TEST_CASE("semigroup engine bundle (DVR)") {
  numsemi::NumericalSemigroup dvr({1});
  HilbertData data = assemble(run_semigroup_engine(numsemi::maximal_ideal(dvr)));
  CHECK(data.e0 == 1);
  CHECK(data.e1 == 0);
  CHECK(data.colength == 1);
  CHECK(data.r == 0);
  CHECK_FALSE(data.r_probabilistic);
  CHECK_FALSE(data.chain_k.has_value());  // Ibar = m: empty chain
}

TEST_CASE("quotient engine bundle (Example 2.4)") {
  QuotientInstance qi;
  qi.variables = {"x", "y"};
  qi.relation = "x^2*y^2";
  qi.ideal_generators = {"x^2", "y"};
  EngineData eng = run_quotient_engine(qi);
  HilbertData data = assemble(eng);
  CHECK(data.e0 == 6);
  CHECK(data.e1 == 6);
  CHECK(data.colength == 2);
  CHECK(data.mu == 2);
  CHECK(data.ord == 1);
  CHECK(data.d == 1);
  CHECK_FALSE(data.r.has_value());
  CHECK_FALSE(data.t.has_value());
}

TEST_CASE("quotient engine rejects bad rings") {
  QuotientInstance qi;
  qi.variables = {"x", "y"};
  qi.relation = "x*y + 1";  // nonzero constant term
  qi.ideal_generators = {"x", "y"};
  CHECK_THROWS_AS(run_quotient_engine(qi), input_error);

  qi.relation = "0";
  CHECK_THROWS_AS(run_quotient_engine(qi), input_error);
}

TEST_CASE("consistency guards in assemble") {
  EngineData eng;
  eng.seq = {{4, 9, 14, 19, 24}, 1};  // e0 = 5, e1 = 5*1-4 = 1
  eng.colength = 4;
  // e1 = 1 >= e0 - colength = 1: fine
  CHECK(assemble(eng).e1 == 1);

  eng.colength = 3;  // disagrees with the sequence head
  CHECK_THROWS_AS(assemble(eng), internal_error);

  // a sequence whose fit lands below the Northcott line is an engine bug
  EngineData bad;
  bad.seq = {{1, 10, 15, 20, 25}, 1};  // e0 = 5, e1 = 0, colength 1
  bad.colength = 1;
  CHECK_THROWS_AS(assemble(bad), internal_error);

  // engine multiplicity must match the fitted e0
  EngineData mis;
  mis.seq = {{2, 6, 11, 16, 21}, 1};
  mis.colength = 2;
  mis.e0_expected = 4;
  CHECK_THROWS_AS(assemble(mis), internal_error);
}
