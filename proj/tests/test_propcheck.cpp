#include <doctest.h>

#include <numeric>

#include "wblow/blowup.hpp"
#include "wblow/errors.hpp"
#include "wblow/localmult.hpp"
#include "wblow/parse.hpp"
#include "wblow/propcheck.hpp"

using namespace wblow;

TEST_CASE("generator respects its limits") {
  Rng rng(1);
  GeneratorLimits lim;
  for (int i = 0; i < 500; ++i) {
    auto f = random_polynomial(rng, 3, lim);
    CHECK_FALSE(f.is_zero());
    CHECK(f.term_count() <= lim.max_terms);
    CHECK(f.total_degree() <= lim.max_degree);
    CHECK(f.constant_term() == 0);
    for (const auto& [m, c] : f.terms()) {
      CHECK(is_integer(c));
      CHECK(abs(c) <= lim.max_coeff);
    }
  }
  for (int i = 0; i < 200; ++i) {
    auto w = random_weights(rng, 4, 6);
    std::uint32_t g = 0;
    for (auto x : w) {
      CHECK(x >= 1);
      CHECK(x <= 6);
      g = std::gcd(g, x);
    }
    CHECK(g == 1);
  }
}

TEST_CASE("certified systems really certify") {
  Rng rng(2);
  GeneratorLimits lim;
  for (int i = 0; i < 20; ++i) {
    auto s = random_certified_system(rng, 2, lim);
    if (!s) continue;
    CHECK(local_multiplicity(*s, lim.cap).status == MultiplicityStatus::Certified);
  }
}

TEST_CASE("quotient samples are semi-invariant") {
  Rng rng(3);
  for (std::uint32_t r : {2u, 3u}) {
    for (int i = 0; i < 10; ++i) {
      auto q = random_quotient_system(rng, 2, r);
      if (!q) continue;
      CHECK(q->r == r);
      std::vector<std::uint32_t> type;
      for (auto w : q->weights) type.push_back(w % r);
      for (const auto& f : q->system) CHECK(is_semi_invariant(f, type, r));
    }
  }
}

TEST_CASE("runs are deterministic and replayable") {
  auto a = run_propcheck("fulton", 12, 99);
  auto b = run_propcheck("fulton", 12, 99);
  CHECK(a.checks == b.checks);
  CHECK(a.skipped == b.skipped);
  CHECK(a.undecided == b.undecided);
  CHECK(a.max_level == b.max_level);
  CHECK(case_seed(99, 3) == case_seed(99, 3));
  CHECK(case_seed(99, 3) != case_seed(99, 4));
  CHECK(case_seed(99, 3) != case_seed(100, 3));

  Rng r1(case_seed(5, 7)), r2(case_seed(5, 7));
  CHECK(to_string(random_polynomial(r1, 2)) == to_string(random_polynomial(r2, 2)));
}

TEST_CASE("every suite passes a short run") {
  for (const auto& suite : propcheck_suites()) {
    CAPTURE(suite);
    auto res = run_propcheck(suite, suite == "valuation" ? 100 : 15, 11);
    CHECK(res.ok());
    CHECK(res.checks > 0);
  }
  CHECK_THROWS_AS(run_propcheck("nope", 1, 1), ArgumentError);
  CHECK_THROWS_AS(run_propcheck("valuation", 0, 1), ArgumentError);
}

TEST_CASE("minimizer drops every removable term") {
  auto s = parse_system("x^3 + 2*x*y + y^5, y^2 - x^4 + 7*x").polys;
  // keep failing while the first polynomial has an x^3 term
  auto has_x3 = [](const std::vector<Polynomial>& v) {
    return v[0].coefficient(Monomial{3, 0}) != 0;
  };
  auto m = minimize_system(s, has_x3);
  CHECK(has_x3(m));
  CHECK(m[0].term_count() == 1);
  // polynomials are never emptied entirely
  CHECK(m[1].term_count() == 1);
}
