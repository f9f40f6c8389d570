#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "seriescone/linalg.hpp"

namespace seriescone {

struct RatVecLess {
  bool operator()(const RatVec& a, const RatVec& b) const { return lex_less(a, b); }
};

// Finite exponent -> coefficient map; exponents are rational vectors, zero
// coefficients are never stored.
template <class C>
class LaurentPoly {
 public:
  LaurentPoly() : n_(0) {}
  explicit LaurentPoly(int n) : n_(n) {}

  static LaurentPoly monomial(int n, const RatVec& e, const C& c) {
    LaurentPoly p(n);
    p.add_term(e, c);
    return p;
  }

  int ambient_dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<RatVec, C, RatVecLess>& terms() const { return terms_; }

  void add_term(const RatVec& e, const C& c) {
    if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent dimension mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      C s = it->second + c;
      if (s.is_zero()) terms_.erase(it);
      else it->second = s;
    }
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  LaurentPoly operator-() const {
    LaurentPoly r(n_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a.n_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(add(ea, eb), ca * cb);
    return r;
  }

  LaurentPoly scaled_by_monomial(const RatVec& e, const C& c) const {
    LaurentPoly r(n_);
    for (const auto& [ea, ca] : terms_) r.add_term(add(ea, e), ca * c);
    return r;
  }

  LaurentPoly pow(Int k) const {
    if (k <= 0) throw std::invalid_argument("series power must be positive");
    LaurentPoly acc(n_);
    bool first = true;
    LaurentPoly base = *this;
    while (k > 0) {
      if (k & 1) {
        acc = first ? base : acc * base;
        first = false;
      }
      k >>= 1;
      if (k) base = base * base;
    }
    return acc;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  std::map<RatVec, C, RatVecLess> terms_;
};

}  // namespace seriescone
