#pragma once

#include <optional>
#include <vector>

#include "seriescone/quad.hpp"
#include "seriescone/rational.hpp"

namespace seriescone {

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using QuadVec = std::vector<Quad>;

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Quad dot(const QuadVec& w, const RatVec& x);

bool is_zero(const IntVec& v);
IntVec negated(const IntVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scaled(const IntVec& v, Int c);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scaled(const RatVec& v, const Rat& c);
RatVec to_rat(const IntVec& v);

// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVec primitive(const IntVec& v);

// Clears denominators and makes the result primitive. Zero stays zero.
IntVec primitive_direction(const RatVec& v);

bool lex_less(const IntVec& a, const IntVec& b);
bool lex_less(const RatVec& a, const RatVec& b);

int rank_of(const std::vector<IntVec>& rows);
int rank_of_rat(const std::vector<RatVec>& rows);

// Canonical row-style Hermite normal form basis of the lattice spanned by
// `rows` (pivots positive, entries above a pivot reduced into [0, pivot)).
std::vector<IntVec> hnf_basis(std::vector<IntVec> rows);

// Canonical basis of {x in Z^n : r . x = 0 for every row r}. The result is
// the full (saturated) kernel lattice, returned in HNF.
std::vector<IntVec> int_kernel(const std::vector<IntVec>& rows, int n);

// Canonical coset representative of v modulo the lattice spanned by an HNF
// basis: entries at pivot columns are reduced into [0, pivot).
IntVec reduce_mod(IntVec v, const std::vector<IntVec>& hnf);

bool in_span(const IntVec& v, const std::vector<IntVec>& rows);

// Unique solution of a square rational system, if the matrix is invertible.
std::optional<RatVec> solve_square(std::vector<RatVec> a, RatVec b);

}  // namespace seriescone
