#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wblow/localmult.hpp"
#include "wblow/polynomial.hpp"
#include "wblow/rational.hpp"

namespace wblow {

// Exact local decomposition of mult_P(D_1...D_d) along a weighted blowup:
//   multiplicity = prod v_E(D_i) / prod w_i + residual,  residual >= 0,
// where residual is the degree of the strict-transform intersection on E and
// vanishes exactly when the least-weight parts have no common zero on P(w).
struct FultonReport {
  Rational multiplicity;
  Rational lower_term;
  Rational residual;
  std::vector<std::uint64_t> valuations;  // w(f_i)
  std::vector<Rational> scales;           // divisor coefficients b_i (all 1 by default)
  unsigned certified_level = 0;
  EmptinessCertificate emptiness;
  bool residual_nonnegative() const { return residual >= 0; }
  // residual == 0 <=> Empty, checked only when the certificate is decisive
  bool consistent() const;
};

// nullopt when the multiplicity cannot be certified within `cap`.
// `scales` multiplies divisor i by b_i > 0 (Q-divisors); empty means all 1.
// Throws ArgumentError on dimension mismatch, gcd(w) != 1, or when the origin
// is not on every divisor.
std::optional<FultonReport> fulton_check(std::span<const Polynomial> system,
                                         const WeightVector& w,
                                         unsigned cap = kDefaultCap,
                                         std::span<const Rational> scales = {});

// Weighted blowup of an LCI (or quotient-LCI) point: blowup weights
// w_1..w_{d+c}, orders w(f_1)..w(f_c) of the defining equations, and the
// quotient index r (1 = no quotient).
class BlowupDatum {
 public:
  BlowupDatum(std::vector<std::uint32_t> weights,
              std::vector<std::uint64_t> lci_orders = {}, std::uint32_t quotient_index = 1);

  const WeightVector& weights() const noexcept { return weights_; }
  const std::vector<std::uint64_t>& lci_orders() const noexcept { return orders_; }
  std::uint32_t quotient_index() const noexcept { return r_; }
  std::size_t dim() const noexcept { return weights_.size() - orders_.size(); }
  std::size_t codim() const noexcept { return orders_.size(); }

 private:
  WeightVector weights_;
  std::vector<std::uint64_t> orders_;
  std::uint32_t r_;
};

struct Discrepancy {
  Rational value;
  // a_E <= 0: the formula was evaluated but E is not a terminal extraction
  bool non_positive = false;
};

// (sum w_i - sum w(f_j)) / r - 1
Discrepancy lci_discrepancy(const BlowupDatum& datum);

// r * prod w(f_j) * a_E^2 / (product of the c+2 largest weights); the strict
// lower bound for mult_P(D_1.D_2)/n^2 of a pair non-canonical at E.
// Throws ArgumentError when dim < 2.
Rational lci_threshold(const BlowupDatum& datum);

// Divisorial contractions to a cA_k point.
struct ContractionWeights {
  enum class Kind { NonExceptional, ExceptionalCA1, ExceptionalCA2 };

  Kind kind = Kind::NonExceptional;
  unsigned k = 1;
  std::uint32_t r1 = 1, r2 = 1, a = 1;

  static ContractionWeights non_exceptional(unsigned k, std::uint32_t r1,
                                            std::uint32_t r2, std::uint32_t a);
  static ContractionWeights exceptional_ca1();  // weights (1,5,3,2), k = 1
  static ContractionWeights exceptional_ca2();  // weights (4,3,2,1), k = 2

  // weights of (x1, x2, x3, x4) in the germ x1*x2 + g(x3, x4) (or the
  // exceptional normal forms), and the order of the defining equation
  std::vector<std::uint32_t> blowup_weights() const;
  std::uint64_t equation_order() const;

  // r1 + r2 = (k+1)a and gcd(a, r1) = gcd(a, r2) = 1 for NonExceptional
  bool valid() const;
  bool operator==(const ContractionWeights&) const = default;
};

// (r1+r2)^2 / ((k+1) r1 r2), or 16/5, 9/4 for the exceptional contractions.
Rational cak_threshold(const ContractionWeights& cw);

// 4/(k+1); the bound every contraction to a cA_k point beats.
Rational cak_floor_threshold(unsigned k);

// NonExceptional tuples with a <= a_max and r1 <= r2, then the exceptional
// contraction for k = 1 or k = 2.
std::vector<ContractionWeights> enumerate_cak_contractions(unsigned k, unsigned a_max);

// Corollary-style decomposition at a cyclic quotient point of type
// 1/r(a_1..a_d) with a_i = w_i mod r, computed upstairs and divided down.
struct QuotientReport {
  std::uint32_t r = 1;
  std::vector<std::uint32_t> type;        // a_i = w_i mod r
  std::uint64_t upstairs_multiplicity = 0;
  std::vector<std::uint64_t> upstairs_valuations;
  Rational multiplicity;                  // upstairs / r
  std::vector<Rational> valuations;       // upstairs / r
  Rational lower_term;                    // prod(v_i) r^{d-1} / prod w_i
  Rational residual;
  unsigned certified_level = 0;
  EmptinessCertificate emptiness;
  bool consistent() const;
};

// mu_r semi-invariance: every monomial has the same sum a_i e_i mod r.
bool is_semi_invariant(const Polynomial& f, std::span<const std::uint32_t> type,
                       std::uint32_t r);

// nullopt when not certified. Throws ArgumentError for non-semi-invariant
// input, r == 0, or gcd(w) != 1.
std::optional<QuotientReport> quotient_mult_relation(std::span<const Polynomial> system,
                                                     std::uint32_t r,
                                                     const WeightVector& w,
                                                     unsigned cap = kDefaultCap);

// l * (-K^3) <= threshold: the maximal-center chain
//   l n^2 (-K^3) >= (T.D1.D2) >= mult_P(D1.D2) > threshold n^2
// is contradictory. Non-strict because the last inequality is strict.
bool exclusion_inequality(std::uint64_t l, const Rational& degree,
                          const Rational& threshold);

}  // namespace wblow
