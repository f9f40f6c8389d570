#pragma once

#include <optional>
#include <vector>

#include "seriescone/cone.hpp"
#include "seriescone/linalg.hpp"

namespace seriescone {

// Pure difference of monomials U^lhs - U^rhs over m variables, lhs != rhs.
// Coefficients never leave {1, -1}, so none are stored.
struct Binomial {
  IntVec lhs;
  IntVec rhs;
  friend bool operator==(const Binomial& a, const Binomial& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
  friend bool operator<(const Binomial& a, const Binomial& b) {
    if (a.lhs != b.lhs) return lex_less(a.lhs, b.lhs);
    return lex_less(a.rhs, b.rhs);
  }
};

struct MonomialIdeal {
  std::vector<IntVec> gens;  // minimal generating antichain under divisibility

  static MonomialIdeal of(std::vector<IntVec> gens);
  bool member(const IntVec& m) const;
  bool empty() const { return gens.empty(); }
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens == b.gens;
  }
};

bool divides(const IntVec& a, const IntVec& b);
IntVec lcm_exp(const IntVec& a, const IntVec& b);

// Term order on monomial exponents. RightLex compares at the rightmost
// differing position, so the trailing block of variables dominates and is
// eliminated by contraction. GradedElim grades the two blocks first, which
// keeps elimination runs degree-bounded on toric inputs.
class TermOrder {
 public:
  enum class Kind { RightLex, Lex, GradedElim };
  TermOrder(Kind kind, int vars, int split = 0) : kind_(kind), vars_(vars), split_(split) {}
  static TermOrder right_lex(int vars) { return TermOrder(Kind::RightLex, vars); }
  static TermOrder graded_elim(int vars, int split) {
    return TermOrder(Kind::GradedElim, vars, split);
  }

  int vars() const { return vars_; }
  bool less(const IntVec& a, const IntVec& b) const;
  // True when contraction to the first `keep` variables is an elimination.
  bool eliminates_tail(int keep) const {
    if (kind_ == Kind::RightLex) return keep <= vars_;
    if (kind_ == Kind::GradedElim) return keep == split_;
    return false;
  }

 private:
  Kind kind_;
  int vars_;
  int split_;
};

// A value in the closure of {0, +-monomial, binomial} that Buchberger steps
// stay inside when the input is binomials plus monomials.
struct BinPoly {
  enum class Kind { Zero, Monomial, Binomial } kind = Kind::Zero;
  IntVec a;  // monomial exponent, or leading exponent of a binomial
  IntVec b;  // trailing exponent of a binomial

  static BinPoly zero() { return {}; }
  static BinPoly monomial(IntVec m);
  static BinPoly binomial(IntVec x, IntVec y, const TermOrder& o);
};

struct BinMonBasis {
  std::vector<Binomial> binomials;  // oriented: lhs is the leading term
  MonomialIdeal monomials;
};

BinPoly reduce(BinPoly p, const BinMonBasis& basis, const TermOrder& o);
BinPoly s_poly(const BinPoly& f, const BinPoly& g, const TermOrder& o);

// Reduced Groebner basis of (binomials) + (monomials); by the structure of
// the S-pair and reduction steps it again consists of binomials and
// monomials only, returned split.
BinMonBasis buchberger_bm(const std::vector<Binomial>& binomials,
                          const MonomialIdeal& monomials, const TermOrder& o);

// Contraction of a Groebner basis to the first `keep` variables. The order
// must eliminate the dropped block.
BinMonBasis eliminate_tail(const BinMonBasis& gb, const TermOrder& o, int keep);

// Generating set of the saturated lattice ideal of relations among the given
// lattice vectors, by Laurent elimination. Every output is a true relation.
std::vector<Binomial> toric_ideal(const std::vector<IntVec>& basis);

struct SemigroupEncoding {
  Cone cone;
  std::vector<IntVec> basis;     // semigroup generators of cone n Z^n
  std::vector<Binomial> ideal;   // toric ideal of the basis
  static SemigroupEncoding of(const Cone& c);
};

// Finite semigroup generating set of c n Z^n (Gordan); equals the Hilbert
// basis when c is pointed, and otherwise includes +- a lattice basis of the
// lineality space.
std::vector<IntVec> semigroup_generators(const Cone& c);

}  // namespace seriescone
