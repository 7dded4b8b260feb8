#include "wblow/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "wblow/errors.hpp"

namespace wblow {

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            Exponent power) {
  if (index >= nvars) throw ArgumentError("variable index out of range");
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

std::uint64_t Monomial::weight(std::span<const std::uint32_t> w) const {
  if (w.size() != exps_.size())
    throw ArgumentError("weight vector has " + std::to_string(w.size()) +
                        " entries, expected " + std::to_string(exps_.size()));
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    s += static_cast<std::uint64_t>(w[i]) * exps_[i];
  return s;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.nvars() != nvars()) throw ArgumentError("monomials from different rings");
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

bool GrLexLess::operator()(const Monomial& a, const Monomial& b) const {
  auto da = a.total_degree();
  auto db = b.total_degree();
  if (da != db) return da < db;
  // within a degree, x0 is the largest variable
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = 0; i < ea.size() && i < eb.size(); ++i)
    if (ea[i] != eb[i]) return ea[i] < eb[i];
  return ea.size() < eb.size();
}

// ---- WeightVector -----------------------------------------------------------

namespace {

void require_positive(const std::vector<std::uint32_t>& w) {
  if (w.empty()) throw ArgumentError("empty weight vector");
  for (auto x : w)
    if (x == 0) throw ArgumentError("weights must be positive integers");
}

}  // namespace

WeightVector WeightVector::ambient(std::vector<std::uint32_t> weights) {
  require_positive(weights);
  return WeightVector(std::move(weights));
}

WeightVector WeightVector::blowup(std::vector<std::uint32_t> weights) {
  require_positive(weights);
  WeightVector w(std::move(weights));
  if (w.gcd() != 1) throw ArgumentError("blowup weights must have gcd 1");
  return w;
}

WeightVector WeightVector::standard(std::size_t n) {
  return WeightVector(std::vector<std::uint32_t>(n, 1));
}

std::uint64_t WeightVector::product() const {
  std::uint64_t p = 1;
  for (auto x : w_) p *= x;
  return p;
}

std::uint64_t WeightVector::gcd() const {
  std::uint64_t g = 0;
  for (auto x : w_) g = std::gcd(g, static_cast<std::uint64_t>(x));
  return g;
}

// ---- Polynomial -------------------------------------------------------------

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Polynomial p(nvars);
  p.add_term(Monomial::variable(nvars, index), 1);
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational{0} : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars_)); }

std::uint64_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

std::optional<std::uint64_t> Polynomial::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.total_degree();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.nvars() != nvars_)
    throw ArgumentError("monomial has " + std::to_string(m.nvars()) +
                        " variables, polynomial has " + std::to_string(nvars_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (o.nvars_ != nvars_)
    throw ArgumentError("polynomials live in rings with " + std::to_string(nvars_) +
                        " and " + std::to_string(o.nvars_) + " variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
  Polynomial r(nvars_);
  for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t * m, c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(nvars_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

// ---- weighted operations ------------------------------------------------------

namespace {

void check_dims(const Polynomial& f, const WeightVector& w) {
  if (f.nvars() != w.size())
    throw ArgumentError("weight vector has " + std::to_string(w.size()) +
                        " entries but the polynomial has " +
                        std::to_string(f.nvars()) + " variables");
}

}  // namespace

std::optional<std::uint64_t> weighted_order(const Polynomial& f,
                                            const WeightVector& w) {
  check_dims(f, w);
  std::optional<std::uint64_t> best;
  for (const auto& [m, c] : f.terms()) {
    auto wt = m.weight(w.values());
    if (!best || wt < *best) best = wt;
  }
  return best;
}

Polynomial least_weight_part(const Polynomial& f, const WeightVector& w) {
  check_dims(f, w);
  if (f.is_zero()) throw ArgumentError("least weight part of the zero polynomial");
  auto ord = *weighted_order(f, w);
  Polynomial r(f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m.weight(w.values()) == ord) r.add_term(m, c);
  return r;
}

std::uint64_t weighted_degree(const Polynomial& f, const WeightVector& w) {
  check_dims(f, w);
  if (f.is_zero()) throw ArgumentError("weighted degree of the zero polynomial");
  std::uint64_t best = 0;
  for (const auto& [m, c] : f.terms()) best = std::max(best, m.weight(w.values()));
  return best;
}

Polynomial truncate(const Polynomial& f, std::uint64_t level, const WeightVector& w) {
  check_dims(f, w);
  Polynomial r(f.nvars());
  for (const auto& [m, c] : f.terms())
    if (m.weight(w.values()) <= level) r.add_term(m, c);
  return r;
}

bool is_quasihomogeneous(const Polynomial& f, const WeightVector& w) {
  check_dims(f, w);
  if (f.is_zero()) return true;
  return *weighted_order(f, w) == weighted_degree(f, w);
}

Polynomial partial_derivative(const Polynomial& f, std::size_t index) {
  if (index >= f.nvars())
    throw ArgumentError("partial derivative index " + std::to_string(index) +
                        " out of range for " + std::to_string(f.nvars()) + " variables");
  Polynomial r(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m[index] == 0) continue;
    Monomial d(m);
    d[index] -= 1;
    r.add_term(d, c * Rational(m[index]));
  }
  return r;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.nvars())
    throw ArgumentError("point has " + std::to_string(point.size()) +
                        " coordinates, polynomial has " + std::to_string(f.nvars()) +
                        " variables");
  Rational total = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.nvars() && t != 0; ++i)
      for (Exponent e = 0; e < m[i]; ++e) t *= point[i];
    total += t;
  }
  return total;
}

Polynomial substitute_linear(const Polynomial& f,
                             const std::vector<std::vector<Rational>>& matrix) {
  const std::size_t n = f.nvars();
  if (matrix.size() != n) throw ArgumentError("substitution matrix has wrong size");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (const auto& row : matrix) {
    if (row.size() != n) throw ArgumentError("substitution matrix is not square");
    Polynomial img(n);
    for (std::size_t j = 0; j < n; ++j) img.add_term(Monomial::variable(n, j), row[j]);
    images.push_back(std::move(img));
  }
  Polynomial r(n);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) t = t * images[i].pow(m[i]);
    r += t;
  }
  return r;
}

// ---- printing -----------------------------------------------------------------

std::vector<std::string> default_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f, std::span<const std::string> names) {
  if (names.size() != f.nvars()) throw ArgumentError("wrong number of variable names");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += to_string(m, names);
    } else {
      out += to_string(mag) + "*" + to_string(m, names);
    }
  }
  return out;
}

std::string to_string(const Polynomial& f) {
  auto names = default_names(f.nvars());
  return to_string(f, names);
}

}  // namespace wblow
