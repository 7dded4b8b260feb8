#include "wblow/localmult.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <numeric>
#include <unordered_map>

#include "echelon.hpp"
#include "wblow/errors.hpp"

namespace wblow {

namespace {

struct ExpHash {
  std::size_t operator()(const std::vector<Exponent>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : v) h = (h ^ e) * 1099511628211ull;
    return h;
  }
};

using ColumnIndex = std::unordered_map<std::vector<Exponent>, std::uint32_t, ExpHash>;

// Calls fn on every exponent vector of total degree exactly `degree`, x0
// exponent descending first.
void for_each_of_degree(std::size_t nvars, std::uint64_t degree,
                        const std::function<void(const std::vector<Exponent>&)>& fn) {
  std::vector<Exponent> e(nvars, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i,
                                                            std::uint64_t left) {
    if (i + 1 == nvars) {
      e[i] = static_cast<Exponent>(left);
      fn(e);
      return;
    }
    for (std::uint64_t k = left + 1; k-- > 0;) {
      e[i] = static_cast<Exponent>(k);
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, degree);
}

// Exponent vectors of weighted degree exactly `degree`.
void for_each_of_weight(std::span<const std::uint32_t> w, std::uint64_t degree,
                        const std::function<void(const std::vector<Exponent>&)>& fn) {
  const std::size_t n = w.size();
  std::vector<Exponent> e(n, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i,
                                                            std::uint64_t left) {
    if (i + 1 == n) {
      if (left % w[i] == 0) {
        e[i] = static_cast<Exponent>(left / w[i]);
        fn(e);
      }
      return;
    }
    for (std::uint64_t k = left / w[i] + 1; k-- > 0;) {
      e[i] = static_cast<Exponent>(k);
      rec(i + 1, left - k * w[i]);
    }
    e[i] = 0;
  };
  rec(0, degree);
}

void validate_square_system(std::span<const Polynomial> system, unsigned cap) {
  if (system.empty()) throw ArgumentError("empty system");
  const std::size_t d = system.size();
  for (const auto& f : system) {
    if (f.nvars() != d)
      throw ArgumentError("local multiplicity needs d equations in d variables; got " +
                          std::to_string(d) + " equations in " +
                          std::to_string(f.nvars()) + " variables");
    if (f.is_zero()) throw ArgumentError("zero polynomial in the system");
  }
  if (cap == 0) throw ArgumentError("cap must be positive");
}

}  // namespace

TruncationLevel macaulay_level(std::span<const Polynomial> system, unsigned level) {
  if (system.empty()) throw ArgumentError("empty system");
  const std::size_t d = system.front().nvars();
  for (const auto& f : system)
    if (f.nvars() != d) throw ArgumentError("system mixes polynomial rings");

  // columns: all monomials of degree <= level, degree ascending
  ColumnIndex index;
  std::vector<std::vector<Exponent>> columns;
  std::vector<std::uint64_t> col_degree;
  for (std::uint64_t deg = 0; deg <= level; ++deg) {
    for_each_of_degree(d, deg, [&](const std::vector<Exponent>& e) {
      index.emplace(e, static_cast<std::uint32_t>(columns.size()));
      columns.push_back(e);
      col_degree.push_back(deg);
    });
  }

  detail::SparseEchelon ech(static_cast<std::uint32_t>(columns.size()));
  for (const auto& f : system) {
    auto ord = f.order();
    if (!ord || *ord > level) continue;
    for (std::uint64_t shift = 0; shift + *ord <= level; ++shift) {
      for_each_of_degree(d, shift, [&](const std::vector<Exponent>& alpha) {
        detail::SparseEchelon::Row row;
        for (const auto& [m, c] : f.terms()) {
          if (m.total_degree() + shift > level) break;  // grlex: degree ascending
          std::vector<Exponent> e(m.exponents());
          for (std::size_t i = 0; i < d; ++i) e[i] += alpha[i];
          row.emplace_back(index.at(e), c);
        }
        ech.insert(detail::SparseEchelon::normalize(std::move(row)));
      });
    }
  }

  TruncationLevel out;
  out.level = level;
  out.rank = ech.rank();
  out.monomials = columns.size();
  for (std::uint32_t c = 0; c < columns.size(); ++c) {
    if (ech.is_pivot(c)) continue;
    out.free_monomials.emplace_back(columns[c]);
    if (col_degree[c] < level) ++out.free_below_level;
    else ++out.free_at_level;
  }
  std::sort(out.free_monomials.begin(), out.free_monomials.end(), GrLexLess{});
  return out;
}

MultiplicityOutcome local_multiplicity(std::span<const Polynomial> system, unsigned cap) {
  validate_square_system(system, cap);
  MultiplicityOutcome out;
  out.cap = cap;
  for (const auto& f : system) {
    if (f.constant_term() != 0) {
      out.status = MultiplicityStatus::UnitIdeal;
      out.result = MultiplicityResult{0, 0, {}};
      return out;
    }
  }
  // m^N in I + m^{N+1} implies the same one level up, so the certificate is
  // monotone in N: gallop to a certifying level, then bisect for the first.
  std::optional<TruncationLevel> hit;
  unsigned lo = 0, hi = 1;
  while (true) {
    TruncationLevel lvl = macaulay_level(system, hi);
    if (lvl.certificate()) {
      hit = std::move(lvl);
      break;
    }
    if (hi == cap) {
      out.status = MultiplicityStatus::Inconclusive;
      return out;
    }
    lo = hi;
    hi = std::min(cap, 2 * hi);
  }
  while (hi - lo > 1) {
    const unsigned mid = lo + (hi - lo) / 2;
    TruncationLevel lvl = macaulay_level(system, mid);
    if (lvl.certificate()) {
      hi = mid;
      hit = std::move(lvl);
    } else {
      lo = mid;
    }
  }
  MultiplicityResult r;
  r.value = hit->free_below_level;
  r.certified_level = hi;
  r.standard_monomials = std::move(hit->free_monomials);
  out.status = MultiplicityStatus::Certified;
  out.result = std::move(r);
  return out;
}

Isolation is_origin_isolated(std::span<const Polynomial> system, unsigned cap) {
  switch (local_multiplicity(system, cap).status) {
    case MultiplicityStatus::Certified:
      return Isolation::Isolated;
    case MultiplicityStatus::UnitIdeal:
      return Isolation::NotThroughOrigin;
    case MultiplicityStatus::Inconclusive:
      break;
  }
  return Isolation::Inconclusive;
}

// ---- emptiness ----------------------------------------------------------------

std::vector<std::vector<Rational>> witness_candidates(std::size_t nvars) {
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < nvars; ++i) {
    std::vector<Rational> p(nvars, Rational(0));
    p[i] = 1;
    out.push_back(std::move(p));
  }
  out.emplace_back(nvars, Rational(1));
  // small-integer points; zeros allowed up to 6 variables
  const bool with_zero = nvars <= 6;
  if (nvars > 8) return out;
  std::vector<int> values = with_zero ? std::vector<int>{-2, -1, 0, 1, 2}
                                      : std::vector<int>{-2, -1, 1, 2};
  std::vector<std::size_t> digit(nvars, 0);
  while (true) {
    std::vector<Rational> p(nvars);
    bool origin = true;
    for (std::size_t i = 0; i < nvars; ++i) {
      p[i] = values[digit[i]];
      if (values[digit[i]] != 0) origin = false;
    }
    if (!origin) out.push_back(std::move(p));
    std::size_t k = nvars;
    while (k > 0) {
      --k;
      if (++digit[k] < values.size()) break;
      digit[k] = 0;
      if (k == 0) return out;
    }
    if (nvars == 0) return out;
  }
}

EmptinessCertificate wps_empty_certificate(std::span<const Polynomial> system,
                                           const WeightVector& w, unsigned cap) {
  if (system.empty()) throw ArgumentError("empty system");
  std::vector<std::uint64_t> degrees;
  for (const auto& f : system) {
    if (f.nvars() != w.size())
      throw ArgumentError("polynomial and weight vector dimensions differ");
    if (f.is_zero()) throw ArgumentError("zero polynomial in an emptiness query");
    if (!is_quasihomogeneous(f, w))
      throw ArgumentError("emptiness certificate needs quasihomogeneous input: " +
                          to_string(f));
    degrees.push_back(weighted_degree(f, w));
  }

  EmptinessCertificate cert;
  cert.cap = cap;
  for (auto& p : witness_candidates(w.size())) {
    bool zero = std::all_of(system.begin(), system.end(),
                            [&](const Polynomial& f) { return evaluate(f, p) == 0; });
    if (zero) {
      cert.verdict = EmptinessVerdict::NonemptyWitness;
      cert.witness = std::move(p);
      return cert;
    }
  }

  std::uint64_t step = 1;
  for (std::size_t i = 0; i < w.size(); ++i) step = std::lcm(step, std::uint64_t{w[i]});

  for (std::uint64_t n = step; n <= cap; n += step) {
    ColumnIndex index;
    std::uint32_t ncols = 0;
    for_each_of_weight(w.values(), n, [&](const std::vector<Exponent>& e) {
      index.emplace(e, ncols++);
    });
    detail::SparseEchelon ech(ncols);
    for (std::size_t k = 0; k < system.size() && ech.rank() < ncols; ++k) {
      if (degrees[k] > n) continue;
      for_each_of_weight(w.values(), n - degrees[k], [&](const std::vector<Exponent>& a) {
        if (ech.rank() == ncols) return;
        detail::SparseEchelon::Row row;
        for (const auto& [m, c] : system[k].terms()) {
          std::vector<Exponent> e(m.exponents());
          for (std::size_t i = 0; i < e.size(); ++i) e[i] += a[i];
          row.emplace_back(index.at(e), c);
        }
        ech.insert(detail::SparseEchelon::normalize(std::move(row)));
      });
    }
    if (ech.rank() == ncols) {
      cert.verdict = EmptinessVerdict::Empty;
      cert.level = static_cast<unsigned>(n);
      return cert;
    }
  }
  cert.verdict = EmptinessVerdict::Inconclusive;
  return cert;
}

}  // namespace wblow
