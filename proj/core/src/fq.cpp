#include "seriescone/fq.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace seriescone {

namespace {

Int mod(Int a, Int p) {
  Int r = a % p;
  return r < 0 ? r + p : r;
}

// Little-endian coefficient lists of the table irreducibles (constant term
// first, leading coefficient 1 has index m).
const std::map<std::pair<Int, int>, std::vector<Int>>& modulus_table() {
  static const std::map<std::pair<Int, int>, std::vector<Int>> table = {
      {{2, 1}, {1, 1}},           {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},     {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 1}, {1, 1}},           {{3, 2}, {2, 2, 1}},
      {{3, 3}, {1, 2, 0, 1}},     {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {3, 1}},           {{5, 2}, {2, 4, 1}},
      {{5, 3}, {3, 3, 0, 1}},     {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},           {{7, 2}, {3, 6, 1}},
      {{7, 3}, {4, 0, 6, 1}},     {{7, 4}, {3, 4, 5, 0, 1}},
  };
  return table;
}

std::vector<Int> poly_mul_mod(const std::vector<Int>& a, const std::vector<Int>& b,
                              const std::vector<Int>& modp, Int p, int m) {
  std::vector<Int> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] = mod(prod[i + j] + a[i] * b[j], p);
  // reduce modulo the monic modulus of degree m
  for (int d = static_cast<int>(prod.size()) - 1; d >= m; --d) {
    Int c = prod[static_cast<size_t>(d)];
    if (c == 0) continue;
    prod[static_cast<size_t>(d)] = 0;
    for (int k = 0; k < m; ++k)
      prod[static_cast<size_t>(d - m + k)] =
          mod(prod[static_cast<size_t>(d - m + k)] - c * modp[static_cast<size_t>(k)], p);
  }
  prod.resize(static_cast<size_t>(m));
  return prod;
}

}  // namespace

void Fq::check_params(Int p, int m) {
  if (!modulus_table().count({p, m}))
    throw std::invalid_argument("unsupported field parameters (need p <= 7, m <= 4)");
}

const std::vector<Int>& Fq::modulus(Int p, int m) {
  check_params(p, m);
  return modulus_table().at({p, m});
}

Fq Fq::scalar(Int p, int m, Int value) {
  Fq f(p, m);
  f.c_[0] = mod(value, p);
  return f;
}

Fq Fq::of(Int p, int m, std::vector<Int> coeffs) {
  Fq f(p, m);
  if (coeffs.size() > static_cast<size_t>(m)) throw std::invalid_argument("coefficient list too long");
  for (size_t i = 0; i < coeffs.size(); ++i) f.c_[i] = mod(coeffs[i], p);
  return f;
}

Fq Fq::generator(Int p, int m) {
  Fq f(p, m);
  if (m == 1) {
    // residue of x = -constant term of the modulus
    f.c_[0] = mod(-modulus(p, m)[0], p);
  } else {
    f.c_[1] = 1;
  }
  return f;
}

Int Fq::field_size() const {
  Int q = 1;
  for (int i = 0; i < m_; ++i) q *= p_;
  return q;
}

bool Fq::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Int c) { return c == 0; });
}

bool Fq::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Fq Fq::operator+(const Fq& o) const {
  if (p_ != o.p_ || m_ != o.m_) throw std::invalid_argument("field mismatch");
  Fq r(p_, m_);
  for (int i = 0; i < m_; ++i)
    r.c_[static_cast<size_t>(i)] = mod(c_[static_cast<size_t>(i)] + o.c_[static_cast<size_t>(i)], p_);
  return r;
}

Fq Fq::operator-(const Fq& o) const { return *this + (-o); }

Fq Fq::operator-() const {
  Fq r(p_, m_);
  for (int i = 0; i < m_; ++i) r.c_[static_cast<size_t>(i)] = mod(-c_[static_cast<size_t>(i)], p_);
  return r;
}

Fq Fq::operator*(const Fq& o) const {
  if (p_ != o.p_ || m_ != o.m_) throw std::invalid_argument("field mismatch");
  Fq r(p_, m_);
  r.c_ = poly_mul_mod(c_, o.c_, modulus(p_, m_), p_, m_);
  return r;
}

Fq Fq::pow(Int e) const {
  if (e < 0) return inverse().pow(-e);
  Fq base = *this;
  Fq acc = scalar(p_, m_, 1);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Fq Fq::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  return pow(field_size() - 2);
}

Fq Fq::pth_root() const {
  Int e = 1;
  for (int i = 0; i < m_ - 1; ++i) e *= p_;
  return pow(e);
}

std::string Fq::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m_; ++i) {
    if (i) os << ",";
    os << c_[static_cast<size_t>(i)];
  }
  os << "]@F" << p_;
  if (m_ > 1) os << "^" << m_;
  return os.str();
}

}  // namespace seriescone
