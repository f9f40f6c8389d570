#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace seriescone {

using Int = long long;

// All arithmetic in this library is exact. Intermediate products go through
// 128 bits; anything that cannot be normalized back into 64 bits throws.
struct overflow_error : std::runtime_error {
  overflow_error() : std::runtime_error("integer overflow in exact arithmetic") {}
};

inline Int checked_cast(__int128 v) {
  if (v > __int128(INT64_MAX) || v < __int128(INT64_MIN)) throw overflow_error{};
  return static_cast<Int>(v);
}

inline Int checked_add(Int a, Int b) { return checked_cast(__int128(a) + b); }
inline Int checked_sub(Int a, Int b) { return checked_cast(__int128(a) - b); }
inline Int checked_mul(Int a, Int b) { return checked_cast(__int128(a) * b); }

inline Int gcd_ll(Int a, Int b) { return std::gcd(a, b); }

inline int sign_of(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Exact rational, always normalized: den > 0, gcd(num, den) = 1.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Int n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(Int n, Int d) { assign(n, d); }

  static Rat of(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 an = n < 0 ? -n : n;
    __int128 g = gcd128(an, d);
    if (g > 1) { n /= g; d /= g; }
    Rat r;
    r.num_ = checked_cast(n);
    r.den_ = checked_cast(d);
    return r;
  }

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return of(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
              __int128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return of(__int128(a.num_) * b.den_ - __int128(b.num_) * a.den_,
              __int128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return of(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return of(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
  }
  Rat operator-() const { Rat r; r.num_ = -num_; r.den_ = den_; return r; }
  Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
  Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
  Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
  Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    __int128 l = __int128(a.num_) * b.den_;
    __int128 r = __int128(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  Int floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }
  Int ceil() const { return -(-*this).floor(); }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void assign(Int n, Int d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    Int g = gcd_ll(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
  }
  Int num_;
  Int den_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace seriescone
