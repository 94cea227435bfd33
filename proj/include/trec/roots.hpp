#pragma once

#include <utility>
#include <vector>

#include "trec/cyclotomic.hpp"
#include "trec/errors.hpp"
#include "trec/ratfunc.hpp"
#include "trec/unipoly.hpp"

namespace trec {

// Raised when a root exists but needs a larger cyclotomic field; the caller
// enlarges the conductor and retries.
struct NeedsLargerField {
  long conductor;
};

// Yun squarefree decomposition (characteristic zero): list of (factor, k)
// with p = prod factor_i^{k_i}, factors pairwise coprime and squarefree.
template <class K>
std::vector<std::pair<UniPoly<K>, long>> squarefree_decompose(const UniPoly<K>& p) {
  std::vector<std::pair<UniPoly<K>, long>> out;
  if (p.degree() <= 0) return out;
  UniPoly<K> a = p.monic();
  UniPoly<K> g = UniPoly<K>::gcd(a, a.derivative());
  if (g.degree() == 0) {
    out.push_back({a, 1});
    return out;
  }
  UniPoly<K> w = a / g;
  long k = 1;
  while (w.degree() > 0) {
    UniPoly<K> y = UniPoly<K>::gcd(w, g);
    UniPoly<K> f = w / y;
    if (f.degree() > 0) out.push_back({f.monic(), k});
    w = y;
    g = g / y;
    ++k;
    if (g.degree() == 0 && w.degree() > 0) {
      out.push_back({w.monic(), k});
      break;
    }
  }
  return out;
}

struct RationalRootSplit {
  std::vector<Rational> roots;
  UniPoly<Rational> leftover;
};

// All rational roots of a squarefree rational polynomial, via the rational
// root theorem on the integerised polynomial, plus the quadratic formula for
// a rational-discriminant residual.
RationalRootSplit rational_roots(const UniPoly<Rational>& q);

// Roots in Q(zeta_N) of a squarefree polynomial over Q(zeta_N).  Handles
// rational-coefficient polynomials (rational roots, quadratic radicals,
// binomials w^k = c) and throws NeedsLargerField when the conductor is too
// small, FieldExtensionRequired when the roots are genuinely out of reach.
struct CycloRootSplit {
  std::vector<Cyclotomic> roots;
  UniPoly<Cyclotomic> leftover;  // product of unresolved factors
};
CycloRootSplit cyclotomic_roots(const UniPoly<Cyclotomic>& q, bool allow_leftover);

// Roots in Q(zeta_N)(t) of a squarefree polynomial whose coefficients are
// monomials in t lying on an integer-slope line (quasi-homogeneous inputs);
// the roots then take the form v * t^m.
struct ParamRootSplit {
  std::vector<RatFunc<Cyclotomic>> roots;
  UniPoly<RatFunc<Cyclotomic>> leftover;
};
ParamRootSplit param_roots(const UniPoly<RatFunc<Cyclotomic>>& q, bool allow_leftover);

// Scalar-generic entry point used by curve analysis.
template <class K>
struct RootSplitT {
  std::vector<K> roots;
  UniPoly<K> leftover;
};
RootSplitT<Rational> field_roots(const UniPoly<Rational>& q, bool allow_leftover);
RootSplitT<Cyclotomic> field_roots(const UniPoly<Cyclotomic>& q, bool allow_leftover);
RootSplitT<RatFunc<Rational>> field_roots(const UniPoly<RatFunc<Rational>>& q,
                                          bool allow_leftover);
RootSplitT<RatFunc<Cyclotomic>> field_roots(const UniPoly<RatFunc<Cyclotomic>>& q,
                                            bool allow_leftover);

}  // namespace trec
