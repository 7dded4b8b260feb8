#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wblow/polynomial.hpp"
#include "wblow/rational.hpp"

namespace wblow {

// P(a_0, ..., a_N) with named homogeneous coordinates.
class AmbientWPS {
 public:
  explicit AmbientWPS(std::vector<std::uint32_t> weights,
                      std::vector<std::string> names = {});

  std::size_t size() const noexcept { return weights_.size(); }
  std::uint32_t weight(std::size_t i) const { return weights_[i]; }
  const std::vector<std::uint32_t>& weights() const noexcept { return weights_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  WeightVector weight_vector() const { return WeightVector::ambient(weights_); }

 private:
  std::vector<std::uint32_t> weights_;
  std::vector<std::string> names_;
};

// Every N of the N+1 weights are coprime.
bool is_well_formed(const AmbientWPS& space);

// Index subsets S (as sorted index lists, size >= 1) with gcd{a_i : i in S} > 1;
// the coordinate strata that can carry quotient singularities.
std::vector<std::vector<std::size_t>> singular_strata(const AmbientWPS& space);

// Case selector for the isolating-class bounds:
//   1a                all pairs i, j
//   1b(m)             pairs avoiding m (a power of x_m occurs in an equation)
//   1c(m1, m2)        pairs avoiding m1, m2 (codimension 2 base-locus condition)
//   2a(r)             pairs {r, j}, j arbitrary (point in the chart x_r != 0)
//   2b(r, m)          pairs {r, j}, j != m
//   2c(r, m1, m2)     pairs {r, j}, j != m1, m2
struct IsolatingVariant {
  enum class Case { A1, B1, C1, A2, B2, C2 };
  Case kind = Case::A1;
  std::size_t r = 0;
  std::vector<std::size_t> excluded;

  static IsolatingVariant all_pairs() { return {}; }
  static IsolatingVariant avoiding(std::vector<std::size_t> excluded);
  static IsolatingVariant chart(std::size_t r, std::vector<std::size_t> excluded = {});

  // "1a", "1b:4", "1c:4,5", "2a:1", "2b:1,4", "2c:1,3,5"
  static IsolatingVariant parse(const std::string& text);
  std::string label() const;
};

struct IsolatingSet {
  std::vector<Polynomial> polynomials;
  std::vector<std::uint64_t> degrees;  // degrees[k] = weighted degree of polynomials[k]
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (i, j) of each g_ij
  std::uint64_t bound = 0;             // max of degrees
};

// g_ij = alpha_j^{b/a_j} x_i^{b/a_i} - alpha_i^{b/a_i} x_j^{b/a_j}, b = lcm(a_i, a_j),
// for the pairs selected by `variant`; identically zero g_ij are dropped.
// Throws ArgumentError for an all-zero point, wrong length, invalid indices, a
// chart index where the point vanishes, or when no g_ij survives.
IsolatingSet isolating_set(std::span<const Rational> point, const AmbientWPS& space,
                           const IsolatingVariant& variant = IsolatingVariant::all_pairs());

// max lcm(a_i, a_j) over the pairs of `variant` (i = j allowed, as displayed).
std::uint64_t isolating_degree_bound(const AmbientWPS& space, const IsolatingVariant& variant);

// Exact rank of the Jacobian matrix (d f_k / d x_j) at `point`.
std::size_t jacobian_rank_at(std::span<const Polynomial> polys,
                             std::span<const Rational> point);

}  // namespace wblow
