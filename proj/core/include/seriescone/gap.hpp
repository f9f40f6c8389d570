#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "seriescone/laurent.hpp"
#include "seriescone/support.hpp"

namespace seriescone {

// Monomial valuation: minimum of w-dot over the support.
template <class C>
Rat nu_omega(const LaurentPoly<C>& g, const RatVec& w) {
  if (g.is_zero()) throw std::invalid_argument("valuation of the zero series");
  bool first = true;
  Rat m;
  for (const auto& [e, c] : g.terms()) {
    Rat v = dot(w, e);
    if (first || v < m) { m = v; first = false; }
  }
  return m;
}

// Initial form: the terms achieving the valuation.
template <class C>
LaurentPoly<C> in_omega(const LaurentPoly<C>& g, const RatVec& w) {
  Rat m = nu_omega(g, w);
  LaurentPoly<C> r(g.ambient_dim());
  for (const auto& [e, c] : g.terms())
    if (dot(w, e) == m) r.add_term(e, c);
  return r;
}

template <class C>
struct GradedExpansion {
  RatVec weight;
  std::vector<std::pair<Rat, LaurentPoly<C>>> pieces;  // strictly increasing levels
};

// Groups the truncation by exact w-level. When the companion support spec is
// given, w must be interior to its tau (otherwise a level of the intended
// infinite series is unbounded).
template <class C>
GradedExpansion<C> graded_expand(const LaurentPoly<C>& f, const RatVec& w,
                                 const SupportSpec* companion = nullptr) {
  if (companion && !tau(*companion).interior_contains(w))
    throw std::invalid_argument("weight on the boundary of tau of the companion spec");
  GradedExpansion<C> ge;
  ge.weight = w;
  std::map<Rat, LaurentPoly<C>> levels;
  for (const auto& [e, c] : f.terms()) {
    Rat v = dot(w, e);
    auto it = levels.find(v);
    if (it == levels.end()) it = levels.emplace(v, LaurentPoly<C>(f.ambient_dim())).first;
    it->second.add_term(e, c);
  }
  for (auto& [v, piece] : levels) ge.pieces.emplace_back(v, std::move(piece));
  return ge;
}

struct GapReport {
  Int degree = 0;
  Rat nu;
  Rat bound;  // nu + degree
  std::vector<Rat> levels;
  std::vector<Rat> ratios;
  bool verdict = false;
  std::optional<size_t> first_violation;
  bool residual_zero = false;
  Rat residual_valuation;
};

// Checks the consecutive-level ratio bound of the graded expansion against
// K = nu + d, and certifies the polynomial relation up to the guaranteed
// truncation level.
template <class C>
GapReport gap_verify(const LaurentPoly<C>& series, const std::vector<LaurentPoly<C>>& coeffs,
                     const RatVec& w, const Rat& guaranteed_level,
                     const SupportSpec* companion = nullptr) {
  if (series.is_zero()) throw std::invalid_argument("zero series");
  GapReport rep;
  Int d = -1;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) d = static_cast<Int>(i);
  if (d < 1) throw std::invalid_argument("polynomial must have degree at least one");
  rep.degree = d;
  bool first = true;
  for (const auto& a : coeffs) {
    if (a.is_zero()) continue;
    for (const auto& [e, c] : a.terms()) {
      Rat v = dot(w, e);
      if (first || v > rep.nu) { rep.nu = v; first = false; }
    }
  }
  rep.bound = rep.nu + Rat(d);

  GradedExpansion<C> ge = graded_expand(series, w, companion);
  for (const auto& [lvl, piece] : ge.pieces) rep.levels.push_back(lvl);
  if (rep.levels.front().sign() <= 0)
    throw std::invalid_argument("leading level must be positive; rescale by a monomial");
  rep.verdict = true;
  for (size_t i = 0; i + 1 < rep.levels.size(); ++i) {
    Rat ratio = rep.levels[i + 1] / rep.levels[i];
    rep.ratios.push_back(ratio);
    if (ratio > rep.bound && rep.verdict) {
      rep.verdict = false;
      rep.first_violation = i;
    }
  }

  // consistency certificate: sum a_i series^i vanishes up to the guaranteed level
  LaurentPoly<C> residual = coeffs[0];
  for (Int i = 1; i <= d; ++i) {
    if (coeffs[static_cast<size_t>(i)].is_zero()) continue;
    residual = residual + coeffs[static_cast<size_t>(i)] * series.pow(i);
  }
  rep.residual_zero = residual.is_zero();
  if (!rep.residual_zero) {
    rep.residual_valuation = nu_omega(residual, w);
    if (rep.residual_valuation < guaranteed_level)
      throw std::invalid_argument("coefficients inconsistent below the guaranteed level");
  }
  return rep;
}

}  // namespace seriescone
