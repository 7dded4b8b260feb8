#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wblow/polynomial.hpp"

namespace wblow {

// Deterministic source for the generators. Maps raw mt19937_64 output by
// modulo so sequences do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct GeneratorLimits {
  unsigned max_degree = 6;
  unsigned max_terms = 6;
  int max_coeff = 9;
  unsigned retries = 200;
  unsigned cap = 12;  // truncation cap used while resampling for a certificate
};

// Nonzero polynomial without constant term.
Polynomial random_polynomial(Rng& rng, std::size_t nvars, const GeneratorLimits& lim = {});

// Entries in [1, max_entry] with gcd 1.
std::vector<std::uint32_t> random_weights(Rng& rng, std::size_t n, std::uint32_t max_entry);

// d random polynomials in d variables, resampled until the origin multiplicity
// certifies within lim.cap; nullopt when the retries run out.
std::optional<std::vector<Polynomial>> random_certified_system(Rng& rng, std::size_t d,
                                                               const GeneratorLimits& lim = {});

struct QuotientSample {
  std::uint32_t r = 2;
  std::vector<std::uint32_t> weights;
  std::vector<Polynomial> system;
};

// Semi-invariant system for 1/r(w mod r), certified within lim.cap.
std::optional<QuotientSample> random_quotient_system(Rng& rng, std::size_t d, std::uint32_t r,
                                                     const GeneratorLimits& lim = {});

struct PropFailure {
  unsigned case_index = 0;
  std::string property;
  std::string system;       // minimized reproducer
  std::vector<std::uint32_t> weights;
  std::string detail;
};

struct PropcheckResult {
  std::string suite;
  unsigned cases = 0;
  std::uint64_t seed = 0;
  unsigned checks = 0;        // individual property evaluations
  unsigned skipped = 0;       // generator gave up or the certificate was inconclusive
  unsigned undecided = 0;     // fulton/quotient: emptiness certificate inconclusive
  unsigned max_level = 0;     // highest certified truncation level seen
  std::vector<PropFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Case i of a run draws from Rng(case_seed(seed, i)), so a single case replays alone.
std::uint64_t case_seed(std::uint64_t seed, unsigned index);

// Suites: "valuation", "corollary", "fulton", "quotient".
std::vector<std::string> propcheck_suites();

// Throws ArgumentError for an unknown suite or cases == 0.
PropcheckResult run_propcheck(const std::string& suite, unsigned cases, std::uint64_t seed,
                              const GeneratorLimits& lim = {});

// Greedy term deletion: drops single terms while `still_fails` keeps holding.
std::vector<Polynomial> minimize_system(
    std::vector<Polynomial> system,
    const std::function<bool(const std::vector<Polynomial>&)>& still_fails);

}  // namespace wblow
