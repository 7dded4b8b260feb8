// Reference computations for the tests. Nothing here calls the library's
// elimination code; the two oracles use unrelated algorithms.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wblow/polynomial.hpp"

namespace oracle {

using Q = mpq_class;

// ---- plane curves: Fulton's intersection algorithm ------------------------------
//
// I(F, G) at the origin from the axioms: I = 0 if either curve misses the
// origin; I(yH, G) = ord_x G(x, 0) + I(H, G); and I(F, G) = I(F, G - c x^k F).
// Each reduction lowers deg G(x, 0), so the loop terminates.

using Plane = std::map<std::pair<unsigned, unsigned>, Q>;  // (deg_x, deg_y) -> coeff

inline Plane to_plane(const wblow::Polynomial& f) {
  Plane p;
  for (const auto& [m, c] : f.terms()) p[{m[0], m[1]}] = c;
  return p;
}

inline void prune(Plane& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline Q constant(const Plane& p) {
  auto it = p.find({0, 0});
  return it == p.end() ? Q(0) : it->second;
}

// Terms of F(x, 0): (degree, lowest degree, leading coefficient), or nullopt if F(x, 0) = 0.
struct Restriction {
  unsigned degree;
  unsigned order;
  Q lead;
};

inline std::optional<Restriction> on_x_axis(const Plane& p) {
  std::optional<Restriction> r;
  for (const auto& [e, c] : p) {
    if (e.second != 0) continue;
    if (!r) r = Restriction{e.first, e.first, c};
    if (e.first > r->degree) r->degree = e.first, r->lead = c;
    if (e.first < r->order) r->order = e.first;
  }
  return r;
}

// nullopt when the curves share a component through the origin.
inline std::optional<std::uint64_t> plane_intersection(Plane f, Plane g) {
  std::uint64_t acc = 0;
  while (true) {
    prune(f);
    prune(g);
    if (f.empty() || g.empty()) return std::nullopt;
    if (constant(f) != 0 || constant(g) != 0) return acc;
    auto rf = on_x_axis(f), rg = on_x_axis(g);
    if (!rf && !rg) return std::nullopt;  // y divides both
    if (!rf || !rg) {
      if (!rf) std::swap(f, g), std::swap(rf, rg);
      // now g = y*h
      acc += rf->order;
      Plane h;
      for (const auto& [e, c] : g) h[{e.first, e.second - 1}] = c;
      g = std::move(h);
      continue;
    }
    if (rf->degree > rg->degree) std::swap(f, g), std::swap(rf, rg);
    const unsigned shift = rg->degree - rf->degree;
    const Q scale = rg->lead / rf->lead;
    for (const auto& [e, c] : f) g[{e.first + shift, e.second}] -= scale * c;
  }
}

// ---- Hilbert-Samuel counting with dense elimination -------------------------------
//
// h(N) = dim k[x]/(I + m^N). When h(N) = h(N-1) the ideal contains m^{N-1} locally
// and h(N) is the multiplicity.

inline void monomials_below(std::size_t n, unsigned bound, std::vector<unsigned>& cur,
                            std::vector<std::vector<unsigned>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e < bound; ++e) {
    cur.push_back(e);
    monomials_below(n, bound - e, cur, out);
    cur.pop_back();
  }
}

inline std::size_t dense_rank(std::vector<std::vector<Q>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Q t = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= t * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::uint64_t colength(const std::vector<wblow::Polynomial>& sys, unsigned n_level) {
  const std::size_t n = sys.front().nvars();
  std::vector<std::vector<unsigned>> mons;
  std::vector<unsigned> cur;
  monomials_below(n, n_level, cur, mons);
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < mons.size(); ++i) index[mons[i]] = i;

  std::vector<std::vector<Q>> rows;
  for (const auto& f : sys) {
    for (const auto& shift : mons) {
      std::vector<Q> row(mons.size());
      bool any = false;
      for (const auto& [m, c] : f.terms()) {
        std::vector<unsigned> e(n);
        unsigned deg = 0;
        for (std::size_t i = 0; i < n; ++i) deg += (e[i] = m[i] + shift[i]);
        if (deg >= n_level) continue;
        row[index.at(e)] = c;
        any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return mons.size() - dense_rank(std::move(rows));
}

inline std::optional<std::uint64_t> hilbert_samuel(const std::vector<wblow::Polynomial>& sys,
                                                   unsigned max_level) {
  std::uint64_t prev = colength(sys, 1);
  if (prev == 0) return 0;
  for (unsigned n = 2; n <= max_level; ++n) {
    const auto h = colength(sys, n);
    if (h == prev) return h;
    prev = h;
  }
  return std::nullopt;
}

}  // namespace oracle
