#include "wblow/wps.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "echelon.hpp"
#include "wblow/errors.hpp"
#include "wblow/parse.hpp"

namespace wblow {

AmbientWPS::AmbientWPS(std::vector<std::uint32_t> weights, std::vector<std::string> names)
    : weights_(std::move(weights)), names_(std::move(names)) {
  if (weights_.empty()) throw ArgumentError("weighted projective space needs weights");
  for (auto a : weights_)
    if (a == 0) throw ArgumentError("weights must be positive integers");
  if (names_.empty()) {
    names_ = default_names(weights_.size());
  } else if (names_.size() != weights_.size()) {
    throw ArgumentError("number of coordinate names differs from number of weights");
  }
}

bool is_well_formed(const AmbientWPS& space) {
  const std::size_t n = space.size();
  if (n < 2) return true;
  for (std::size_t skip = 0; skip < n; ++skip) {
    std::uint64_t g = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (i != skip) g = std::gcd(g, std::uint64_t{space.weight(i)});
    if (g != 1) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> singular_strata(const AmbientWPS& space) {
  const std::size_t n = space.size();
  if (n > 20) throw ArgumentError("too many coordinates for stratum enumeration");
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::uint64_t g = 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        g = std::gcd(g, std::uint64_t{space.weight(i)});
        idx.push_back(i);
      }
    }
    if (g > 1) out.push_back(std::move(idx));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// ---- variants -------------------------------------------------------------------

IsolatingVariant IsolatingVariant::avoiding(std::vector<std::size_t> excluded) {
  IsolatingVariant v;
  v.kind = excluded.empty() ? Case::A1 : excluded.size() == 1 ? Case::B1 : Case::C1;
  if (excluded.size() > 2) throw ArgumentError("at most two excluded coordinates");
  v.excluded = std::move(excluded);
  return v;
}

IsolatingVariant IsolatingVariant::chart(std::size_t r, std::vector<std::size_t> excluded) {
  IsolatingVariant v;
  v.kind = excluded.empty() ? Case::A2 : excluded.size() == 1 ? Case::B2 : Case::C2;
  if (excluded.size() > 2) throw ArgumentError("at most two excluded coordinates");
  v.r = r;
  v.excluded = std::move(excluded);
  return v;
}

IsolatingVariant IsolatingVariant::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string tag = text.substr(0, colon);
  std::vector<std::size_t> args;
  if (colon != std::string::npos) {
    for (const auto& f : split_list(text.substr(colon + 1))) {
      if (f.empty() || f.find_first_not_of("0123456789") != std::string::npos)
        throw ArgumentError("bad index '" + f + "' in variant '" + text + "'");
      args.push_back(std::stoul(f));
    }
  }
  auto expect = [&](std::size_t n) {
    if (args.size() != n)
      throw ArgumentError("variant '" + tag + "' takes " + std::to_string(n) +
                          " index argument(s)");
  };
  if (tag == "1a") { expect(0); return all_pairs(); }
  if (tag == "1b") { expect(1); return avoiding(args); }
  if (tag == "1c") { expect(2); return avoiding(args); }
  if (tag == "2a") { expect(1); return chart(args[0]); }
  if (tag == "2b") { expect(2); return chart(args[0], {args[1]}); }
  if (tag == "2c") { expect(3); return chart(args[0], {args[1], args[2]}); }
  throw ArgumentError("unknown isolating variant '" + text + "'");
}

std::string IsolatingVariant::label() const {
  std::string s;
  std::vector<std::size_t> args;
  switch (kind) {
    case Case::A1: s = "1a"; break;
    case Case::B1: s = "1b"; break;
    case Case::C1: s = "1c"; break;
    case Case::A2: s = "2a"; break;
    case Case::B2: s = "2b"; break;
    case Case::C2: s = "2c"; break;
  }
  if (kind == Case::A2 || kind == Case::B2 || kind == Case::C2) args.push_back(r);
  args.insert(args.end(), excluded.begin(), excluded.end());
  for (std::size_t i = 0; i < args.size(); ++i)
    s += (i == 0 ? ":" : ",") + std::to_string(args[i]);
  return s;
}

namespace {

bool is_chart(const IsolatingVariant& v) {
  using C = IsolatingVariant::Case;
  return v.kind == C::A2 || v.kind == C::B2 || v.kind == C::C2;
}

void validate_variant(const AmbientWPS& space, const IsolatingVariant& v) {
  std::set<std::size_t> seen;
  for (auto m : v.excluded) {
    if (m >= space.size()) throw ArgumentError("excluded index out of range");
    if (!seen.insert(m).second) throw ArgumentError("excluded indices must be distinct");
  }
  if (is_chart(v)) {
    if (v.r >= space.size()) throw ArgumentError("chart index out of range");
    if (seen.count(v.r)) throw ArgumentError("chart index cannot be excluded");
  }
}

// Pairs (i, j), i < j, selected by the variant; includes i == j only for the
// bound computation (lcm(a_i, a_i) = a_i never exceeds a genuine pair).
std::vector<std::pair<std::size_t, std::size_t>> selected_pairs(const AmbientWPS& space,
                                                                const IsolatingVariant& v,
                                                                bool diagonal) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < space.size(); ++i)
    if (std::find(v.excluded.begin(), v.excluded.end(), i) == v.excluded.end())
      keep.push_back(i);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (is_chart(v)) {
    for (auto j : keep)
      if (j != v.r || diagonal) out.emplace_back(std::min(v.r, j), std::max(v.r, j));
  } else {
    for (std::size_t x = 0; x < keep.size(); ++x)
      for (std::size_t y = diagonal ? x : x + 1; y < keep.size(); ++y)
        out.emplace_back(keep[x], keep[y]);
  }
  return out;
}

Rational rational_pow(const Rational& base, std::uint64_t e) {
  Rational r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

std::uint64_t isolating_degree_bound(const AmbientWPS& space, const IsolatingVariant& variant) {
  validate_variant(space, variant);
  std::uint64_t best = 0;
  for (auto [i, j] : selected_pairs(space, variant, true))
    best = std::max(best, std::lcm(std::uint64_t{space.weight(i)}, std::uint64_t{space.weight(j)}));
  if (best == 0) throw ArgumentError("variant selects no coordinates");
  return best;
}

IsolatingSet isolating_set(std::span<const Rational> point, const AmbientWPS& space,
                           const IsolatingVariant& variant) {
  if (point.size() != space.size())
    throw ArgumentError("point has " + std::to_string(point.size()) +
                        " coordinates, space has " + std::to_string(space.size()));
  if (std::all_of(point.begin(), point.end(), [](const Rational& q) { return q == 0; }))
    throw ArgumentError("the all-zero vector is not a point of a weighted projective space");
  validate_variant(space, variant);
  if (is_chart(variant) && point[variant.r] == 0)
    throw ArgumentError("point does not lie in the chart x_" + std::to_string(variant.r) +
                        " != 0");

  const std::size_t n = space.size();
  IsolatingSet out;
  for (auto [i, j] : selected_pairs(space, variant, false)) {
    const std::uint64_t ai = space.weight(i), aj = space.weight(j);
    const std::uint64_t b = std::lcm(ai, aj);
    Polynomial g(n);
    g.add_term(Monomial::variable(n, i, static_cast<Exponent>(b / ai)),
               rational_pow(point[j], b / aj));
    g.add_term(Monomial::variable(n, j, static_cast<Exponent>(b / aj)),
               -rational_pow(point[i], b / ai));
    if (g.is_zero()) continue;
    out.polynomials.push_back(std::move(g));
    out.degrees.push_back(b);
    out.pairs.emplace_back(i, j);
    out.bound = std::max(out.bound, b);
  }
  if (out.polynomials.empty())
    throw ArgumentError("the point has no nonzero coordinate among the selected indices");
  return out;
}

std::size_t jacobian_rank_at(std::span<const Polynomial> polys,
                             std::span<const Rational> point) {
  if (polys.empty()) return 0;
  const std::size_t n = point.size();
  detail::SparseEchelon ech(static_cast<std::uint32_t>(n));
  for (const auto& f : polys) {
    if (f.nvars() != n)
      throw ArgumentError("point has " + std::to_string(n) + " coordinates, polynomial has " +
                          std::to_string(f.nvars()) + " variables");
    detail::SparseEchelon::Row row;
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = evaluate(partial_derivative(f, j), point);
      if (v != 0) row.emplace_back(static_cast<std::uint32_t>(j), std::move(v));
    }
    ech.insert(std::move(row));
  }
  return ech.rank();
}

}  // namespace wblow
