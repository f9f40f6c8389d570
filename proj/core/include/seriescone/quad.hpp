#pragma once

#include "seriescone/rational.hpp"

namespace seriescone {

// Value a + b*sqrt(D) in the real quadratic field Q(sqrt(D)), D a positive
// non-square integer. D == 0 encodes a plain rational (b must be 0 then).
// Only signs and linear combinations are needed, so there is no division.
struct Quad {
  Rat a;
  Rat b;
  Int D = 0;

  Quad() = default;
  Quad(Rat a_) : a(a_), b(0), D(0) {}  // NOLINT
  Quad(Rat a_, Rat b_, Int D_) : a(a_), b(b_), D(D_) {
    if (b.is_zero()) D = 0;
    if (D == 0 && !b.is_zero()) throw std::domain_error("sqrt part without radicand");
  }

  bool is_rational() const { return D == 0; }
  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  // Sign of a + b*sqrt(D), decided by comparing a^2 with b^2 D.
  int sign() const {
    if (b.is_zero()) return a.sign();
    if (a.is_zero()) return b.sign();
    int sa = a.sign(), sb = b.sign();
    if (sa > 0 && sb > 0) return 1;
    if (sa < 0 && sb < 0) return -1;
    Rat lhs = a * a;
    Rat rhs = b * b * Rat(D);
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  friend Quad operator+(const Quad& x, const Quad& y) {
    Int d = merge_radicand(x, y);
    return Quad(x.a + y.a, x.b + y.b, d);
  }
  friend Quad operator-(const Quad& x, const Quad& y) {
    Int d = merge_radicand(x, y);
    return Quad(x.a - y.a, x.b - y.b, d);
  }
  Quad operator-() const { return Quad(-a, -b, D); }
  friend Quad operator*(const Quad& x, const Rat& c) { return Quad(x.a * c, x.b * c, x.D); }
  friend Quad operator*(const Rat& c, const Quad& x) { return x * c; }

  friend bool operator==(const Quad& x, const Quad& y) { return (x - y).is_zero(); }

 private:
  static Int merge_radicand(const Quad& x, const Quad& y) {
    if (x.D == 0) return y.D;
    if (y.D == 0 || x.D == y.D) return x.D;
    throw std::domain_error("mixed quadratic radicands");
  }
};

}  // namespace seriescone
