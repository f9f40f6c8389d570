#include "seriescone/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace seriescone {

Int dot(const IntVec& a, const IntVec& b) {
  assert(a.size() == b.size());
  __int128 acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += __int128(a[i]) * b[i];
  return checked_cast(acc);
}

Rat dot(const RatVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rat acc;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat dot(const IntVec& a, const RatVec& b) {
  assert(a.size() == b.size());
  Rat acc;
  for (size_t i = 0; i < a.size(); ++i) acc += Rat(a[i]) * b[i];
  return acc;
}

Quad dot(const QuadVec& w, const RatVec& x) {
  assert(w.size() == x.size());
  Quad acc;
  for (size_t i = 0; i < w.size(); ++i) acc = acc + w[i] * x[i];
  return acc;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](Int c) { return c == 0; });
}

IntVec negated(const IntVec& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

IntVec scaled(const IntVec& v, Int c) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(v[i], c);
  return r;
}

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scaled(const RatVec& v, const Rat& c) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

IntVec primitive(const IntVec& v) {
  Int g = 0;
  for (Int c : v) g = gcd_ll(g, c < 0 ? -c : c);
  if (g <= 1) return v;
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVec primitive_direction(const RatVec& v) {
  Int lcm = 1;
  for (const Rat& c : v) lcm = checked_mul(lcm / gcd_ll(lcm, c.den()), c.den());
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(v[i].num(), lcm / v[i].den());
  return primitive(r);
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool lex_less(const RatVec& a, const RatVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rat& x, const Rat& y) { return x < y; });
}

int rank_of_rat(const std::vector<RatVec>& rows) {
  if (rows.empty()) return 0;
  std::vector<RatVec> m = rows;
  size_t n = m[0].size();
  int rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m.size(); ++col) {
    size_t piv = row;
    while (piv < m.size() && m[piv][col].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    for (size_t i = row + 1; i < m.size(); ++i) {
      if (m[i][col].is_zero()) continue;
      Rat f = m[i][col] / m[row][col];
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

int rank_of(const std::vector<IntVec>& rows) {
  std::vector<RatVec> r;
  r.reserve(rows.size());
  for (const auto& v : rows) r.push_back(to_rat(v));
  return rank_of_rat(r);
}

namespace {

// Clears column `col` of all working rows but one via extended-gcd row ops.
// Returns the index of the surviving pivot row, or -1 if the column is zero.
int gcd_sweep(std::vector<IntVec>& work, size_t col, size_t begin) {
  while (true) {
    int nonzero = -1;
    int count = 0;
    size_t best = 0;
    Int best_abs = 0;
    for (size_t i = begin; i < work.size(); ++i) {
      Int c = work[i][col];
      if (c == 0) continue;
      ++count;
      nonzero = static_cast<int>(i);
      Int a = c < 0 ? -c : c;
      if (best_abs == 0 || a < best_abs) { best_abs = a; best = i; }
    }
    if (count == 0) return -1;
    if (count == 1) return nonzero;
    for (size_t i = begin; i < work.size(); ++i) {
      if (i == best || work[i][col] == 0) continue;
      Int q = work[i][col] / work[best][col];
      if (q != 0) work[i] = sub(work[i], scaled(work[best], q));
    }
  }
}

}  // namespace

std::vector<IntVec> hnf_basis(std::vector<IntVec> rows) {
  std::erase_if(rows, [](const IntVec& v) { return is_zero(v); });
  if (rows.empty()) return {};
  size_t n = rows[0].size();
  std::vector<IntVec> basis;
  size_t begin = 0;
  for (size_t col = 0; col < n && begin < rows.size(); ++col) {
    int piv = gcd_sweep(rows, col, begin);
    if (piv < 0) continue;
    std::swap(rows[begin], rows[static_cast<size_t>(piv)]);
    if (rows[begin][col] < 0) rows[begin] = negated(rows[begin]);
    basis.push_back(rows[begin]);
    ++begin;
  }
  // Reduce entries above each pivot into [0, pivot).
  std::vector<size_t> pivot_col(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    size_t c = 0;
    while (basis[i][c] == 0) ++c;
    pivot_col[i] = c;
  }
  for (size_t i = 1; i < basis.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      Int p = basis[i][pivot_col[i]];
      Int e = basis[j][pivot_col[i]];
      Int q = e >= 0 ? e / p : -((-e + p - 1) / p);
      if (q != 0) basis[j] = sub(basis[j], scaled(basis[i], q));
    }
  }
  return basis;
}

std::vector<IntVec> int_kernel(const std::vector<IntVec>& rows, int n) {
  // Rows of [M^T | I]: integer row reduction confined to the left block;
  // rows whose left block vanishes carry a kernel basis in the right block.
  size_t m = rows.size();
  std::vector<IntVec> work(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    IntVec r(m + static_cast<size_t>(n), 0);
    for (size_t j = 0; j < m; ++j) r[j] = rows[j][static_cast<size_t>(i)];
    r[m + static_cast<size_t>(i)] = 1;
    work[static_cast<size_t>(i)] = r;
  }
  size_t begin = 0;
  for (size_t col = 0; col < m && begin < work.size(); ++col) {
    int piv = gcd_sweep(work, col, begin);
    if (piv < 0) continue;
    std::swap(work[begin], work[static_cast<size_t>(piv)]);
    ++begin;
  }
  std::vector<IntVec> kernel;
  for (size_t i = begin; i < work.size(); ++i) {
    bool left_zero = true;
    for (size_t j = 0; j < m; ++j)
      if (work[i][j] != 0) { left_zero = false; break; }
    assert(left_zero);
    (void)left_zero;
    kernel.emplace_back(work[i].begin() + static_cast<long>(m), work[i].end());
  }
  return hnf_basis(std::move(kernel));
}

IntVec reduce_mod(IntVec v, const std::vector<IntVec>& hnf) {
  for (const IntVec& row : hnf) {
    size_t c = 0;
    while (row[c] == 0) ++c;
    Int p = row[c];
    Int e = v[c];
    Int q = e >= 0 ? e / p : -((-e + p - 1) / p);
    if (q != 0) v = sub(v, scaled(row, q));
  }
  return v;
}

bool in_span(const IntVec& v, const std::vector<IntVec>& rows) {
  std::vector<IntVec> with = rows;
  with.push_back(v);
  return rank_of(with) == rank_of(rows);
}

std::optional<RatVec> solve_square(std::vector<RatVec> a, RatVec b) {
  size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      Rat f = a[i][col] / a[col][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  RatVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace seriescone
