#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wblow/rational.hpp"

namespace wblow {

using Exponent = std::uint32_t;

class WeightVector;

// Exponent vector x0^e0 * ... * x{n-1}^e{n-1}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial variable(std::size_t nvars, std::size_t index,
                           Exponent power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  std::uint64_t total_degree() const noexcept;
  // sum w_i * e_i; w must have nvars entries
  std::uint64_t weight(std::span<const std::uint32_t> w) const;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

// Graded lexicographic order: total degree first, then lex with x0 > x1 > ...
struct GrLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Positive integer weights. Blowup weights additionally have gcd 1;
// ambient weighted-projective weights only need to be positive.
class WeightVector {
 public:
  static WeightVector blowup(std::vector<std::uint32_t> weights);
  static WeightVector ambient(std::vector<std::uint32_t> weights);
  static WeightVector standard(std::size_t n);

  std::size_t size() const noexcept { return w_.size(); }
  std::uint32_t operator[](std::size_t i) const { return w_[i]; }
  std::span<const std::uint32_t> values() const noexcept { return w_; }
  std::uint64_t product() const;
  std::uint64_t gcd() const;

  bool operator==(const WeightVector&) const = default;

 private:
  explicit WeightVector(std::vector<std::uint32_t> w) : w_(std::move(w)) {}
  std::vector<std::uint32_t> w_;
};

// Sparse polynomial over Q in a fixed number of variables. No zero
// coefficients are ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrLexLess>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  std::uint64_t total_degree() const;  // 0 for the zero polynomial
  // lowest total degree of a term (unweighted order); nullopt for zero
  std::optional<std::uint64_t> order() const;

  // Adds c*m; removes the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial times_monomial(const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;

 private:
  void check_same_ring(const Polynomial& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

// Weighted order min_m sum w_i*a_i. nullopt stands for +infinity (zero poly).
std::optional<std::uint64_t> weighted_order(const Polynomial& f,
                                            const WeightVector& w);

// Terms of f whose weight equals weighted_order(f, w).
Polynomial least_weight_part(const Polynomial& f, const WeightVector& w);

// max_m sum w_i*a_i over the terms of f.
std::uint64_t weighted_degree(const Polynomial& f, const WeightVector& w);

// Terms of weight <= level.
Polynomial truncate(const Polynomial& f, std::uint64_t level,
                    const WeightVector& w);

// All terms share one weight. The zero polynomial counts as quasihomogeneous.
bool is_quasihomogeneous(const Polynomial& f, const WeightVector& w);

Polynomial partial_derivative(const Polynomial& f, std::size_t index);

Rational evaluate(const Polynomial& f, std::span<const Rational> point);

// Polynomial composed with the linear substitution x_i -> sum_j M[i][j] x_j.
Polynomial substitute_linear(const Polynomial& f,
                             const std::vector<std::vector<Rational>>& matrix);

// Default variable names x0, x1, ...
std::vector<std::string> default_names(std::size_t nvars);

// Canonical text, terms in descending grlex order, e.g. "x1*x2 + x3^2 - 1/2*x4".
std::string to_string(const Polynomial& f, std::span<const std::string> names);
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, std::span<const std::string> names);

}  // namespace wblow
