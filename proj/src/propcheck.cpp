#include "wblow/propcheck.hpp"

#include <algorithm>
#include <numeric>

#include "wblow/blowup.hpp"
#include "wblow/errors.hpp"
#include "wblow/localmult.hpp"

namespace wblow {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ArgumentError("empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

namespace {

Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned degree) {
  std::vector<Exponent> e(nvars, 0);
  for (unsigned k = 0; k < degree; ++k)
    ++e[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(nvars) - 1))];
  return Monomial(std::move(e));
}

Rational random_coefficient(Rng& rng, int max_coeff) {
  std::int64_t c = rng.uniform(1, max_coeff);
  return Rational(rng.uniform(0, 1) ? c : -c);
}

std::string system_text(const std::vector<Polynomial>& system) {
  std::string s;
  for (std::size_t i = 0; i < system.size(); ++i) s += (i ? ", " : "") + to_string(system[i]);
  return s;
}

bool certified(const std::vector<Polynomial>& system, unsigned cap) {
  return local_multiplicity(system, cap).status == MultiplicityStatus::Certified;
}

}  // namespace

Polynomial random_polynomial(Rng& rng, std::size_t nvars, const GeneratorLimits& lim) {
  if (nvars == 0) throw ArgumentError("need at least one variable");
  while (true) {
    Polynomial f(nvars);
    const auto nterms = rng.uniform(1, lim.max_terms);
    for (std::int64_t t = 0; t < nterms; ++t) {
      const auto deg = static_cast<unsigned>(rng.uniform(1, lim.max_degree));
      const auto m = random_monomial(rng, nvars, deg);
      const auto c = random_coefficient(rng, lim.max_coeff);
      if (f.coefficient(m) == 0) f.add_term(m, c);  // a repeat would push |c| past the limit
    }
    if (!f.is_zero()) return f;
  }
}

std::vector<std::uint32_t> random_weights(Rng& rng, std::size_t n, std::uint32_t max_entry) {
  if (n == 0 || max_entry == 0) throw ArgumentError("bad weight request");
  while (true) {
    std::vector<std::uint32_t> w(n);
    std::uint32_t g = 0;
    for (auto& x : w) {
      x = static_cast<std::uint32_t>(rng.uniform(1, max_entry));
      g = std::gcd(g, x);
    }
    if (g == 1) return w;
  }
}

std::optional<std::vector<Polynomial>> random_certified_system(Rng& rng, std::size_t d,
                                                               const GeneratorLimits& lim) {
  for (unsigned attempt = 0; attempt < lim.retries; ++attempt) {
    std::vector<Polynomial> sys;
    for (std::size_t i = 0; i < d; ++i) sys.push_back(random_polynomial(rng, d, lim));
    if (certified(sys, lim.cap)) return sys;
  }
  return std::nullopt;
}

std::optional<QuotientSample> random_quotient_system(Rng& rng, std::size_t d, std::uint32_t r,
                                                     const GeneratorLimits& lim) {
  if (r == 0) throw ArgumentError("quotient index must be positive");
  for (unsigned attempt = 0; attempt < lim.retries; ++attempt) {
    QuotientSample s;
    s.r = r;
    s.weights = random_weights(rng, d, 6);
    std::vector<std::uint32_t> type;
    for (auto w : s.weights) type.push_back(w % r);
    for (std::size_t i = 0; i < d; ++i) {
      const auto cls = static_cast<std::uint64_t>(rng.uniform(0, r - 1));
      Polynomial f(d);
      const auto want = rng.uniform(1, lim.max_terms);
      for (int tries = 0, have = 0; tries < 64 && have < want; ++tries) {
        auto m = random_monomial(rng, d, static_cast<unsigned>(rng.uniform(1, lim.max_degree)));
        std::uint64_t c = 0;
        for (std::size_t j = 0; j < d; ++j) c += std::uint64_t{type[j]} * m[j];
        if (c % r != cls) continue;
        f.add_term(m, random_coefficient(rng, lim.max_coeff));
        ++have;
      }
      s.system.push_back(std::move(f));
    }
    if (std::any_of(s.system.begin(), s.system.end(),
                    [](const Polynomial& f) { return f.is_zero(); }))
      continue;
    if (certified(s.system, lim.cap)) return s;
  }
  return std::nullopt;
}

std::vector<Polynomial> minimize_system(
    std::vector<Polynomial> system,
    const std::function<bool(const std::vector<Polynomial>&)>& still_fails) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < system.size() && !changed; ++i) {
      if (system[i].terms().size() < 2) continue;
      for (const auto& [m, c] : system[i].terms()) {
        auto trial = system;
        trial[i].add_term(m, -c);
        if (still_fails(trial)) {
          system = std::move(trial);
          changed = true;
          break;
        }
      }
    }
  }
  return system;
}

std::uint64_t case_seed(std::uint64_t seed, unsigned index) {
  // splitmix64 finalizer over (seed, index)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (std::uint64_t{index} + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<std::string> propcheck_suites() {
  return {"valuation", "corollary", "fulton", "quotient"};
}

namespace {

using Check = std::function<std::optional<std::string>(const std::vector<Polynomial>&)>;

// Runs `check`; on failure minimizes and records.
void record(PropcheckResult& res, unsigned idx, const std::string& property,
            const std::vector<Polynomial>& system, const std::vector<std::uint32_t>& w,
            const Check& check) {
  ++res.checks;
  auto failure = check(system);
  if (!failure) return;
  auto small = minimize_system(system, [&](const std::vector<Polynomial>& s) {
    try {
      return check(s).has_value();
    } catch (const std::exception&) {
      return false;
    }
  });
  res.failures.push_back({idx, property, system_text(small), w, *check(small)});
}

void valuation_case(PropcheckResult& res, Rng& rng, unsigned idx, const GeneratorLimits& lim) {
  const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
  const auto wv = random_weights(rng, n, 7);
  const auto w = WeightVector::ambient(wv);
  std::vector<Polynomial> pair{random_polynomial(rng, n, lim), random_polynomial(rng, n, lim)};

  record(res, idx, "order(fg) = order(f) + order(g)", pair, wv, [&](const auto& s) {
    auto lhs = weighted_order(s[0] * s[1], w);
    auto rhs = *weighted_order(s[0], w) + *weighted_order(s[1], w);
    return lhs == rhs ? std::nullopt
                      : std::optional<std::string>("order(fg) = " +
                                                   std::to_string(lhs.value_or(0)) +
                                                   ", sum = " + std::to_string(rhs));
  });
  record(res, idx, "order(f+g) >= min", pair, wv, [&](const auto& s) -> std::optional<std::string> {
    auto sum = weighted_order(s[0] + s[1], w);
    auto lo = std::min(*weighted_order(s[0], w), *weighted_order(s[1], w));
    if (!sum || *sum >= lo) return std::nullopt;
    return "order(f+g) = " + std::to_string(*sum) + " < " + std::to_string(lo);
  });
  record(res, idx, "least weight part idempotent", pair, wv,
         [&](const auto& s) -> std::optional<std::string> {
           auto l = least_weight_part(s[0], w);
           if (least_weight_part(l, w) == l) return std::nullopt;
           return "lwp(lwp(f)) != lwp(f)";
         });
  record(res, idx, "least weight part multiplicative", pair, wv,
         [&](const auto& s) -> std::optional<std::string> {
           if (least_weight_part(s[0] * s[1], w) ==
               least_weight_part(s[0], w) * least_weight_part(s[1], w))
             return std::nullopt;
           return "lwp(fg) != lwp(f) lwp(g)";
         });
  record(res, idx, "order <= degree, equality iff quasihomogeneous", pair, wv,
         [&](const auto& s) -> std::optional<std::string> {
           auto o = *weighted_order(s[0], w);
           auto d = weighted_degree(s[0], w);
           if (o <= d && ((o == d) == is_quasihomogeneous(s[0], w))) return std::nullopt;
           return "order " + std::to_string(o) + ", degree " + std::to_string(d);
         });
  record(res, idx, "truncate(f, degree) = f", pair, wv,
         [&](const auto& s) -> std::optional<std::string> {
           if (truncate(s[0], weighted_degree(s[0], w), w) == s[0]) return std::nullopt;
           return "truncation at the weighted degree changed f";
         });
}

std::optional<std::string> corollary_violation(const std::vector<Polynomial>& s,
                                               const WeightVector& w, std::uint64_t value) {
  Rational lo = 1, hi = 1, den = static_cast<unsigned long>(w.product());
  for (const auto& f : s) {
    lo *= Rational(static_cast<unsigned long>(*weighted_order(f, w)));
    hi *= Rational(static_cast<unsigned long>(weighted_degree(f, w)));
  }
  lo /= den;
  hi /= den;
  const Rational v = static_cast<unsigned long>(value);
  if (lo <= v && v <= hi) return std::nullopt;
  return "bounds " + to_string(lo) + " <= " + to_string(v) + " <= " + to_string(hi) +
         " violated";
}

void corollary_case(PropcheckResult& res, Rng& rng, unsigned idx, const GeneratorLimits& lim) {
  const auto d = static_cast<std::size_t>(rng.uniform(2, 3));
  auto sys = random_certified_system(rng, d, lim);
  if (!sys) {
    ++res.skipped;
    return;
  }
  const auto base = *local_multiplicity(*sys, lim.cap).result;
  res.max_level = std::max(res.max_level, base.certified_level);
  for (int k = 0; k < 5; ++k) {
    const auto wv = k == 0 ? std::vector<std::uint32_t>(d, 1) : random_weights(rng, d, 5);
    const auto w = WeightVector::blowup(wv);
    record(res, idx, "weighted order bounds on the multiplicity", *sys, wv,
           [&](const std::vector<Polynomial>& s) -> std::optional<std::string> {
             if (&s == &*sys || s == *sys) return corollary_violation(s, w, base.value);
             auto m = local_multiplicity(s, lim.cap);
             if (m.status != MultiplicityStatus::Certified) return std::nullopt;
             return corollary_violation(s, w, m.result->value);
           });
  }
}

template <class Report>
std::optional<std::string> decomposition_violation(const Report& rep) {
  if (rep.residual < 0) return "negative residual " + to_string(rep.residual);
  if (rep.multiplicity != rep.lower_term + rep.residual) return "decomposition not exact";
  if (!rep.consistent())
    return "residual " + to_string(rep.residual) + " disagrees with the emptiness verdict";
  return std::nullopt;
}

void fulton_case(PropcheckResult& res, Rng& rng, unsigned idx, const GeneratorLimits& lim) {
  const auto d = static_cast<std::size_t>(rng.uniform(2, 3));
  auto sys = random_certified_system(rng, d, lim);
  if (!sys) {
    ++res.skipped;
    return;
  }
  const auto wv = random_weights(rng, d, 5);
  const auto w = WeightVector::blowup(wv);
  auto rep = fulton_check(*sys, w, lim.cap);
  if (!rep) {
    ++res.skipped;
    return;
  }
  res.max_level = std::max(res.max_level, rep->certified_level);
  if (rep->emptiness.verdict == EmptinessVerdict::Inconclusive) ++res.undecided;
  record(res, idx, "exact decomposition with non-negative residual", *sys, wv,
         [&](const auto& s) -> std::optional<std::string> {
           auto r = fulton_check(s, w, lim.cap);
           return r ? decomposition_violation(*r) : std::nullopt;
         });
}

void quotient_case(PropcheckResult& res, Rng& rng, unsigned idx, const GeneratorLimits& lim) {
  const auto d = static_cast<std::size_t>(rng.uniform(2, 3));
  const auto r = static_cast<std::uint32_t>(2 + idx % 2);
  auto sample = random_quotient_system(rng, d, r, lim);
  if (!sample) {
    ++res.skipped;
    return;
  }
  const auto w = WeightVector::blowup(sample->weights);
  auto rep = quotient_mult_relation(sample->system, r, w, lim.cap);
  if (!rep) {
    ++res.skipped;
    return;
  }
  res.max_level = std::max(res.max_level, rep->certified_level);
  if (rep->emptiness.verdict == EmptinessVerdict::Inconclusive) ++res.undecided;
  record(res, idx, "quotient decomposition (mu_" + std::to_string(r) + ")", sample->system,
         sample->weights, [&](const auto& s) -> std::optional<std::string> {
           auto q = quotient_mult_relation(s, r, w, lim.cap);
           return q ? decomposition_violation(*q) : std::nullopt;
         });
}

}  // namespace

PropcheckResult run_propcheck(const std::string& suite, unsigned cases, std::uint64_t seed,
                              const GeneratorLimits& lim) {
  if (cases == 0) throw ArgumentError("cases must be positive");
  if (lim.cap == 0) throw ArgumentError("cap must be positive");
  auto fn = suite == "valuation"   ? &valuation_case
            : suite == "corollary" ? &corollary_case
            : suite == "fulton"    ? &fulton_case
            : suite == "quotient"  ? &quotient_case
                                   : nullptr;
  if (!fn) throw ArgumentError("unknown suite '" + suite + "' (valuation, corollary, fulton, quotient)");
  PropcheckResult res;
  res.suite = suite;
  res.cases = cases;
  res.seed = seed;
  for (unsigned i = 0; i < cases; ++i) {
    Rng rng(case_seed(seed, i));
    fn(res, rng, i, lim);
  }
  return res;
}

}  // namespace wblow
