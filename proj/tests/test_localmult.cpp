#include <doctest.h>

#include "oracle.hpp"
#include "wblow/errors.hpp"
#include "wblow/localmult.hpp"
#include "wblow/parse.hpp"
#include "wblow/propcheck.hpp"

using namespace wblow;

namespace {

std::vector<Polynomial> sys(const std::string& text) { return parse_system(text).polys; }

std::vector<Polynomial> sys(const std::string& text, const std::vector<std::string>& names) {
  return parse_system(text, names).polys;
}

std::uint64_t value_of(const std::vector<Polynomial>& s, unsigned cap = kDefaultCap) {
  auto out = local_multiplicity(s, cap);
  REQUIRE(out.status == MultiplicityStatus::Certified);
  return out.result->value;
}

std::vector<Polynomial> monomial_system(const std::vector<Exponent>& k) {
  std::vector<Polynomial> s;
  for (std::size_t i = 0; i < k.size(); ++i)
    s.push_back(Polynomial::monomial(Monomial::variable(k.size(), i, k[i])));
  return s;
}

}  // namespace

TEST_CASE("curated multiplicities") {
  CHECK(value_of(sys("x^2, y^3")) == 6);
  CHECK(value_of(sys("x^2+y^3, y^2")) == 4);
  CHECK(value_of(sys("x+y, y+z, z^2")) == 2);
  CHECK(value_of(sys("x^2-y^2, x^2-y^2+y^3")) == 6);
  CHECK(value_of(sys("x, y")) == 1);
  // the grlex-largest pivot would eliminate y^2 and leave nothing at degree 1
  CHECK(value_of(sys("x + y^2, y^3")) == 3);

  auto unit = local_multiplicity(sys("1 + x, y"));
  CHECK(unit.status == MultiplicityStatus::UnitIdeal);
  REQUIRE(unit.result.has_value());
  CHECK(unit.result->value == 0);

  auto line = local_multiplicity(sys("x*y, x"), 10);
  CHECK(line.status == MultiplicityStatus::Inconclusive);
  CHECK(line.cap == 10);
}

TEST_CASE("result invariants") {
  auto out = local_multiplicity(sys("x^2+y^3, y^2"));
  REQUIRE(out.result);
  CHECK(out.result->value == out.result->standard_monomials.size());
  for (const auto& m : out.result->standard_monomials)
    CHECK(m.total_degree() < out.result->certified_level);
  CHECK(out.result->certified_level <= 4);
}

TEST_CASE("isolation") {
  CHECK(is_origin_isolated(sys("x, y")) == Isolation::Isolated);
  CHECK(is_origin_isolated(sys("x*y, x"), 10) == Isolation::Inconclusive);
  CHECK(is_origin_isolated(sys("x^2+y^3, y^2")) == Isolation::Isolated);
  CHECK(is_origin_isolated(sys("x - 1, y")) == Isolation::NotThroughOrigin);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(local_multiplicity(sys("x, y, x*y")), ArgumentError);
  CHECK_THROWS_AS(local_multiplicity(sys("x, y"), 0), ArgumentError);
  std::vector<Polynomial> with_zero{Polynomial(2), parse_in("x", {"x", "y"})};
  CHECK_THROWS_AS(local_multiplicity(with_zero), ArgumentError);
}

TEST_CASE("monomial systems: product of exponents at the expected level") {
  for (Exponent a = 1; a <= 5; ++a)
    for (Exponent b = 1; b <= 5; ++b)
      for (Exponent c = 1; c <= 5; ++c) {
        auto out = local_multiplicity(monomial_system({a, b, c}));
        REQUIRE(out.status == MultiplicityStatus::Certified);
        CHECK(out.result->value == a * b * c);
        CHECK(out.result->certified_level == a + b + c - 2);
      }
}

TEST_CASE("plane curves agree with Fulton's algorithm") {
  // curated pairs first, then random ones
  const char* cases[] = {"x^2+y^3, y^2",       "x^2-y^2, x^2-y^2+y^3", "y^2-x^3, y^2-x^3+x^4",
                         "y-x^2, y",           "x^3+y^4, x*y",         "x^2-y^3, x^3-y^2",
                         "y^2-x^5, y^3-x^7"};
  for (const char* c : cases) {
    CAPTURE(c);
    auto s = sys(c, {"x", "y"});
    auto expect = oracle::plane_intersection(oracle::to_plane(s[0]), oracle::to_plane(s[1]));
    REQUIRE(expect);
    CHECK(value_of(s) == *expect);
  }

  Rng rng(4242);
  GeneratorLimits lim;
  int compared = 0;
  for (int i = 0; i < 150; ++i) {
    auto s = random_certified_system(rng, 2, lim);
    if (!s) continue;
    auto expect = oracle::plane_intersection(oracle::to_plane((*s)[0]), oracle::to_plane((*s)[1]));
    CAPTURE(to_string((*s)[0]));
    CAPTURE(to_string((*s)[1]));
    REQUIRE(expect);
    CHECK(value_of(*s, lim.cap) == *expect);
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("three variables agree with dense Hilbert-Samuel counting") {
  CHECK(oracle::hilbert_samuel(sys("x+y, y+z, z^2"), 12) == 2u);
  Rng rng(777);
  GeneratorLimits lim;
  lim.cap = 8;
  int compared = 0;
  for (int i = 0; i < 40; ++i) {
    auto s = random_certified_system(rng, 3, lim);
    if (!s) continue;
    auto expect = oracle::hilbert_samuel(*s, lim.cap + 1);
    REQUIRE(expect);
    CHECK(value_of(*s, lim.cap) == *expect);
    ++compared;
  }
  CHECK(compared > 20);
}

TEST_CASE("truncation monotonicity") {
  for (const char* c : {"x^2+y^3, y^2", "x^3-y^2, x*y^2+y^5", "x+y, y+z, z^2"}) {
    CAPTURE(c);
    auto s = sys(c);
    auto out = local_multiplicity(s);
    REQUIRE(out.result);
    std::uint64_t prev = 0;
    for (unsigned n = 1; n <= out.result->certified_level + 4; ++n) {
      auto lvl = macaulay_level(s, n);
      CHECK(lvl.free_below_level >= prev);
      prev = lvl.free_below_level;
      if (n >= out.result->certified_level) {
        CHECK(lvl.certificate());
        CHECK(lvl.free_below_level == out.result->value);
      }
    }
  }
}

TEST_CASE("linear changes of coordinates preserve the multiplicity") {
  Rng rng(31337);
  GeneratorLimits lim;
  int tried = 0;
  for (int i = 0; i < 40 && tried < 20; ++i) {
    auto s = random_certified_system(rng, 2, lim);
    if (!s) continue;
    std::vector<std::vector<Rational>> m(2, std::vector<Rational>(2));
    do {
      for (auto& row : m)
        for (auto& e : row) e = rng.uniform(-3, 3);
    } while (m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0);
    std::vector<Polynomial> moved;
    for (const auto& f : *s) moved.push_back(substitute_linear(f, m));
    // the substituted system can need a higher truncation level
    CHECK(value_of(moved, 40) == value_of(*s, lim.cap));
    ++tried;
  }
  CHECK(tried == 20);
}

TEST_CASE("emptiness certificates") {
  auto e1 = wps_empty_certificate(sys("x, y"), WeightVector::ambient({1, 2}));
  CHECK(e1.verdict == EmptinessVerdict::Empty);
  CHECK(e1.level == 2);

  auto e2 = wps_empty_certificate(sys("z^3 - t^2"), WeightVector::ambient({2, 3}));
  REQUIRE(e2.verdict == EmptinessVerdict::NonemptyWitness);
  CHECK(e2.witness == std::vector<Rational>{1, 1});

  auto e3 = wps_empty_certificate(sys("x^2 - y^2, y^2"), WeightVector::ambient({1, 1}));
  CHECK(e3.verdict == EmptinessVerdict::Empty);
  CHECK(e3.level == 3);

  // P(1,2) with the single equation x: the point (0:1) survives, although every
  // degree-1 monomial lies in the ideal
  auto e4 = wps_empty_certificate(sys("x", {"x", "y"}), WeightVector::ambient({1, 2}));
  CHECK(e4.verdict == EmptinessVerdict::NonemptyWitness);

  CHECK_THROWS_AS(wps_empty_certificate(sys("x + y^2"), WeightVector::ambient({1, 1})),
                  ArgumentError);
}

TEST_CASE("witnesses are genuine common zeros") {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + i % 2;
    auto w = WeightVector::ambient(random_weights(rng, n, 4));
    std::vector<Polynomial> s;
    for (int k = 0; k < 2; ++k) {
      auto f = least_weight_part(random_polynomial(rng, n), w);
      s.push_back(f);
    }
    auto e = wps_empty_certificate(s, w, 24);
    if (e.verdict != EmptinessVerdict::NonemptyWitness) continue;
    bool nonzero = false;
    for (const auto& c : e.witness) nonzero = nonzero || c != 0;
    CHECK(nonzero);
    for (const auto& f : s) CHECK(evaluate(f, e.witness) == 0);
  }
}

TEST_CASE("emptiness is stable under adding equations") {
  struct Case {
    const char* base;
    const char* extra;
    std::vector<std::uint32_t> w;
  };
  const Case cases[] = {{"x, y", "x^2 + y", {1, 2}},
                        {"x^2 - y^2, y^2", "x*y", {1, 1}},
                        {"x^3 - y^2, x*y", "y^2", {2, 3}},
                        {"x, y, z^2", "x*z", {1, 1, 1}}};
  for (const auto& c : cases) {
    CAPTURE(c.base);
    auto names = parse_system(std::string(c.base) + ", " + c.extra).names;
    auto small = parse_system(c.base, names).polys;
    auto big = parse_system(std::string(c.base) + ", " + c.extra, names).polys;
    auto w = WeightVector::ambient(c.w);
    REQUIRE(wps_empty_certificate(small, w).verdict == EmptinessVerdict::Empty);
    CHECK(wps_empty_certificate(big, w).verdict == EmptinessVerdict::Empty);
  }
}
