#include "wblow/blowup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wblow/errors.hpp"

namespace wblow {

namespace {

bool decisive_consistent(const Rational& residual, const EmptinessCertificate& e) {
  switch (e.verdict) {
    case EmptinessVerdict::Empty:
      return residual == 0;
    case EmptinessVerdict::NonemptyWitness:
      return residual > 0;
    case EmptinessVerdict::Inconclusive:
      break;
  }
  return true;
}

void require_certifiable(std::span<const Polynomial> system, const WeightVector& w) {
  if (system.empty()) throw ArgumentError("empty system");
  if (w.size() != system.size())
    throw ArgumentError("need one weight per variable: " + std::to_string(system.size()) +
                        " variables, " + std::to_string(w.size()) + " weights");
  if (w.gcd() != 1) throw ArgumentError("blowup weights must have gcd 1");
}

std::vector<Polynomial> least_weight_parts(std::span<const Polynomial> system,
                                           const WeightVector& w) {
  std::vector<Polynomial> out;
  out.reserve(system.size());
  for (const auto& f : system) out.push_back(least_weight_part(f, w));
  return out;
}

}  // namespace

bool FultonReport::consistent() const {
  return residual >= 0 && multiplicity == lower_term + residual &&
         decisive_consistent(residual, emptiness);
}

std::optional<FultonReport> fulton_check(std::span<const Polynomial> system,
                                         const WeightVector& w, unsigned cap,
                                         std::span<const Rational> scales) {
  require_certifiable(system, w);
  if (!scales.empty() && scales.size() != system.size())
    throw ArgumentError("need one scale per divisor");
  for (const auto& b : scales)
    if (b <= 0) throw ArgumentError("divisor scales must be positive");

  auto mult = local_multiplicity(system, cap);
  if (mult.status == MultiplicityStatus::UnitIdeal)
    throw ArgumentError("the origin is not on every divisor");
  if (mult.status != MultiplicityStatus::Certified) return std::nullopt;

  FultonReport rep;
  rep.scales.assign(system.size(), Rational(1));
  if (!scales.empty()) rep.scales.assign(scales.begin(), scales.end());
  Rational scale_product = 1;
  for (const auto& b : rep.scales) scale_product *= b;

  Rational orders = 1;
  for (const auto& f : system) {
    auto v = *weighted_order(f, w);
    rep.valuations.push_back(v);
    orders *= Rational(static_cast<unsigned long>(v));
  }
  rep.multiplicity = scale_product * Rational(static_cast<unsigned long>(mult.result->value));
  rep.lower_term = scale_product * orders / Rational(static_cast<unsigned long>(w.product()));
  rep.residual = rep.multiplicity - rep.lower_term;
  rep.certified_level = mult.result->certified_level;
  rep.emptiness = wps_empty_certificate(least_weight_parts(system, w), w, cap);
  return rep;
}

// ---- discrepancies and thresholds ---------------------------------------------

BlowupDatum::BlowupDatum(std::vector<std::uint32_t> weights,
                         std::vector<std::uint64_t> lci_orders,
                         std::uint32_t quotient_index)
    : weights_(WeightVector::blowup(std::move(weights))),
      orders_(std::move(lci_orders)),
      r_(quotient_index) {
  if (r_ == 0) throw ArgumentError("quotient index must be positive");
  if (orders_.size() >= weights_.size())
    throw ArgumentError("need more blowup weights than defining equations");
  for (auto o : orders_)
    if (o == 0) throw ArgumentError("equation orders must be positive");
}

Discrepancy lci_discrepancy(const BlowupDatum& datum) {
  std::int64_t sum = 0;
  for (auto w : datum.weights().values()) sum += w;
  for (auto o : datum.lci_orders()) sum -= static_cast<std::int64_t>(o);
  Discrepancy d;
  d.value = make_rational(sum, datum.quotient_index()) - 1;
  d.non_positive = d.value <= 0;
  return d;
}

Rational lci_threshold(const BlowupDatum& datum) {
  if (datum.dim() < 2) throw ArgumentError("threshold needs dimension at least 2");
  std::vector<std::uint32_t> w(datum.weights().values().begin(),
                               datum.weights().values().end());
  std::sort(w.begin(), w.end());
  const std::size_t take = datum.codim() + 2;
  Rational denom = 1;
  for (std::size_t i = w.size() - take; i < w.size(); ++i) denom *= w[i];
  Rational num = datum.quotient_index();
  for (auto o : datum.lci_orders()) num *= Rational(static_cast<unsigned long>(o));
  const Rational a = lci_discrepancy(datum).value;
  return num * a * a / denom;
}

ContractionWeights ContractionWeights::non_exceptional(unsigned k, std::uint32_t r1,
                                                       std::uint32_t r2, std::uint32_t a) {
  ContractionWeights cw{Kind::NonExceptional, k, r1, r2, a};
  if (!cw.valid())
    throw ArgumentError("contraction weights violate r1 + r2 = (k+1)a, gcd(a, r_i) = 1");
  return cw;
}

ContractionWeights ContractionWeights::exceptional_ca1() {
  return {Kind::ExceptionalCA1, 1, 0, 0, 0};
}

ContractionWeights ContractionWeights::exceptional_ca2() {
  return {Kind::ExceptionalCA2, 2, 0, 0, 0};
}

bool ContractionWeights::valid() const {
  switch (kind) {
    case Kind::NonExceptional:
      return k >= 1 && r1 >= 1 && r2 >= 1 && a >= 1 &&
             std::uint64_t{r1} + r2 == std::uint64_t{k + 1} * a && std::gcd(a, r1) == 1 &&
             std::gcd(a, r2) == 1;
    case Kind::ExceptionalCA1:
      return k == 1;
    case Kind::ExceptionalCA2:
      return k == 2;
  }
  return false;
}

std::vector<std::uint32_t> ContractionWeights::blowup_weights() const {
  switch (kind) {
    case Kind::ExceptionalCA1:
      return {1, 5, 3, 2};
    case Kind::ExceptionalCA2:
      return {4, 3, 2, 1};
    case Kind::NonExceptional:
      break;
  }
  return {r1, r2, a, 1};
}

std::uint64_t ContractionWeights::equation_order() const {
  switch (kind) {
    case Kind::ExceptionalCA1:
    case Kind::ExceptionalCA2:
      return 6;
    case Kind::NonExceptional:
      break;
  }
  return std::uint64_t{k + 1} * a;
}

Rational cak_threshold(const ContractionWeights& cw) {
  if (!cw.valid()) throw ArgumentError("invalid contraction weights");
  switch (cw.kind) {
    case ContractionWeights::Kind::ExceptionalCA1:
      return make_rational(16, 5);
    case ContractionWeights::Kind::ExceptionalCA2:
      return make_rational(9, 4);
    case ContractionWeights::Kind::NonExceptional:
      break;
  }
  const Rational sum = std::uint64_t{cw.r1} + cw.r2;
  return sum * sum / (Rational(cw.k + 1) * cw.r1 * cw.r2);
}

Rational cak_floor_threshold(unsigned k) {
  if (k == 0) throw ArgumentError("k must be at least 1");
  return make_rational(4, k + 1);
}

std::vector<ContractionWeights> enumerate_cak_contractions(unsigned k, unsigned a_max) {
  if (k == 0) throw ArgumentError("k must be at least 1");
  std::vector<ContractionWeights> out;
  for (std::uint32_t a = 1; a <= a_max; ++a) {
    const std::uint32_t total = (k + 1) * a;
    for (std::uint32_t r1 = 1; 2 * r1 <= total; ++r1) {
      ContractionWeights cw{ContractionWeights::Kind::NonExceptional, k, r1, total - r1, a};
      if (cw.valid()) out.push_back(cw);
    }
  }
  if (k == 1) out.push_back(ContractionWeights::exceptional_ca1());
  if (k == 2) out.push_back(ContractionWeights::exceptional_ca2());
  return out;
}

// ---- quotient singularities ---------------------------------------------------

bool is_semi_invariant(const Polynomial& f, std::span<const std::uint32_t> type,
                       std::uint32_t r) {
  if (r == 0) throw ArgumentError("quotient index must be positive");
  if (type.size() != f.nvars()) throw ArgumentError("type has the wrong length");
  std::optional<std::uint64_t> cls;
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < type.size(); ++i) s += std::uint64_t{type[i]} * m[i];
    s %= r;
    if (cls && *cls != s) return false;
    cls = s;
  }
  return true;
}

bool QuotientReport::consistent() const {
  return residual >= 0 && multiplicity == lower_term + residual &&
         decisive_consistent(residual, emptiness);
}

std::optional<QuotientReport> quotient_mult_relation(std::span<const Polynomial> system,
                                                     std::uint32_t r,
                                                     const WeightVector& w,
                                                     unsigned cap) {
  if (r == 0) throw ArgumentError("quotient index must be positive");
  require_certifiable(system, w);
  std::vector<std::uint32_t> type;
  for (auto wi : w.values()) type.push_back(wi % r);
  for (const auto& f : system) {
    if (f.nvars() != w.size()) throw ArgumentError("dimension mismatch");
    if (!is_semi_invariant(f, type, r))
      throw ArgumentError("polynomial is not semi-invariant for the mu_" +
                          std::to_string(r) + " action: " + to_string(f));
  }
  auto mult = local_multiplicity(system, cap);
  if (mult.status == MultiplicityStatus::UnitIdeal)
    throw ArgumentError("the origin is not on every divisor");
  if (mult.status != MultiplicityStatus::Certified) return std::nullopt;

  const std::size_t d = system.size();
  QuotientReport rep;
  rep.r = r;
  rep.type = type;
  rep.upstairs_multiplicity = mult.result->value;
  rep.certified_level = mult.result->certified_level;
  rep.multiplicity = make_rational(static_cast<std::int64_t>(mult.result->value), r);
  Rational prod = 1;
  for (const auto& f : system) {
    auto v = *weighted_order(f, w);
    rep.upstairs_valuations.push_back(v);
    rep.valuations.push_back(make_rational(static_cast<std::int64_t>(v), r));
    prod *= rep.valuations.back();
  }
  Rational rpow = 1;
  for (std::size_t i = 0; i + 1 < d; ++i) rpow *= r;
  rep.lower_term = prod * rpow / Rational(static_cast<unsigned long>(w.product()));
  rep.residual = rep.multiplicity - rep.lower_term;
  rep.emptiness = wps_empty_certificate(least_weight_parts(system, w), w, cap);
  return rep;
}

bool exclusion_inequality(std::uint64_t l, const Rational& degree,
                          const Rational& threshold) {
  return Rational(static_cast<unsigned long>(l)) * degree <= threshold;
}

}  // namespace wblow
