#pragma once

#include <string>
#include <vector>

#include "seriescone/rational.hpp"

namespace seriescone {

// Element of F_{p^m}, p <= 7 and m <= 4, as a polynomial residue modulo a
// fixed irreducible from a published table (so serialized coefficients are
// reproducible). Coefficients are little-endian in the residue class of x.
class Fq {
 public:
  Fq() : p_(2), m_(1), c_(1, 0) {}
  Fq(Int p, int m) : p_(p), m_(m), c_(static_cast<size_t>(m), 0) { check_params(p, m); }
  static Fq scalar(Int p, int m, Int value);
  static Fq of(Int p, int m, std::vector<Int> coeffs);
  static Fq generator(Int p, int m);  // the residue class of x

  static const std::vector<Int>& modulus(Int p, int m);  // little-endian, degree m

  Int p() const { return p_; }
  int degree() const { return m_; }
  Int field_size() const;
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  Fq operator+(const Fq& o) const;
  Fq operator-(const Fq& o) const;
  Fq operator-() const;
  Fq operator*(const Fq& o) const;
  Fq inverse() const;
  Fq pow(Int e) const;
  Fq frobenius() const { return pow(p_); }
  // Inverse of Frobenius: x^{p^{m-1}}.
  Fq pth_root() const;

  friend bool operator==(const Fq& a, const Fq& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.c_ == b.c_;
  }
  std::string str() const;

 private:
  static void check_params(Int p, int m);
  Int p_;
  int m_;
  std::vector<Int> c_;
};

}  // namespace seriescone
