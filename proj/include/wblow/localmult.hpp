#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wblow/polynomial.hpp"

namespace wblow {

inline constexpr unsigned kDefaultCap = 64;

// dim k[[x]]/(f_1..f_d) with the truncation level N at which the Nakayama
// certificate m^N ⊆ I + m^{N+1} was found. standard_monomials is a basis of
// the quotient; each has total degree < certified_level.
struct MultiplicityResult {
  std::uint64_t value = 0;
  unsigned certified_level = 0;
  std::vector<Monomial> standard_monomials;
};

enum class MultiplicityStatus { Certified, UnitIdeal, Inconclusive };

struct MultiplicityOutcome {
  MultiplicityStatus status = MultiplicityStatus::Inconclusive;
  std::optional<MultiplicityResult> result;  // Certified, or value 0 for UnitIdeal
  unsigned cap = 0;
};

// One step of the Macaulay truncation: the span I_N of the truncations of
// x^a * f_i inside k[x]/m^{N+1}, reduced with a local (degree-ascending)
// pivot order.
struct TruncationLevel {
  unsigned level = 0;
  std::uint64_t rank = 0;
  std::uint64_t monomials = 0;            // dim k[x]/m^{N+1}
  std::uint64_t free_below_level = 0;     // non-pivot monomials of degree < N
  std::uint64_t free_at_level = 0;        // non-pivot monomials of degree N
  std::vector<Monomial> free_monomials;   // all non-pivot monomials, ascending
  bool certificate() const { return free_at_level == 0; }
};

TruncationLevel macaulay_level(std::span<const Polynomial> system, unsigned level);

// Local intersection multiplicity at the origin of d hypersurfaces in d
// variables. Throws ArgumentError on d != nvars, a zero input, or cap == 0.
MultiplicityOutcome local_multiplicity(std::span<const Polynomial> system,
                                       unsigned cap = kDefaultCap);

enum class Isolation { Isolated, NotThroughOrigin, Inconclusive };

// Isolated iff the multiplicity certifies. The engine never claims a
// positive-dimensional component; failure to certify is Inconclusive.
Isolation is_origin_isolated(std::span<const Polynomial> system,
                             unsigned cap = kDefaultCap);

// ---- emptiness on a weighted projective space -------------------------------

enum class EmptinessVerdict { Empty, NonemptyWitness, Inconclusive };

struct EmptinessCertificate {
  EmptinessVerdict verdict = EmptinessVerdict::Inconclusive;
  unsigned level = 0;            // Empty: weighted degree N of the certificate
  std::vector<Rational> witness; // NonemptyWitness: common zero, not the origin
  unsigned cap = 0;              // Inconclusive: search bound
};

// Decides whether quasihomogeneous f_1..f_m have a common zero in P(w).
// Empty(N) means every monomial of w-degree N lies in the degree-N piece of
// the ideal, with N divisible by every w_i (so every x_i^{N/w_i} is in the
// ideal and the zero set in the punctured cone is empty).
// Throws ArgumentError on non-quasihomogeneous or zero input.
EmptinessCertificate wps_empty_certificate(std::span<const Polynomial> system,
                                           const WeightVector& w,
                                           unsigned cap = kDefaultCap);

// Witness candidates tried before the degree search, in probing order.
std::vector<std::vector<Rational>> witness_candidates(std::size_t nvars);

}  // namespace wblow
