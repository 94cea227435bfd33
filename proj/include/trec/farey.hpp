#pragma once

#include <utility>
#include <vector>

#include "trec/errors.hpp"
#include "trec/extfraction.hpp"

namespace trec {

// Farey sequence of order r: all irreducible nonnegative fractions with
// denominator <= r, ascending, truncated at `bound` (inclusive).  The order-1
// sequence is 0, 1, 2, ..., inf; a finite bound must be supplied.
inline std::vector<ExtFraction> farey_sequence(long r, const ExtFraction& bound) {
  if (r < 1) throw DomainError("farey order must be >= 1");
  std::vector<ExtFraction> out;
  if (r == 1) {
    if (bound.is_infinite())
      throw DomainError("order-1 Farey sequence is unbounded; give a finite bound");
    for (mpz_class p = 0; ExtFraction(p, 1) <= bound; ++p)
      out.push_back(ExtFraction(p, 1));
    return out;
  }
  // standard next-term recurrence: from a/b < c/d adjacent in F_r,
  // the successor is ((k*c - a) / (k*d - b)) with k = floor((r + b) / d)
  mpz_class a = 0, b = 1, c = 1, d = r;
  out.push_back(ExtFraction(a, b));
  while (ExtFraction(c, d) <= bound) {
    out.push_back(ExtFraction(c, d));
    mpz_class k = (r + b) / d;
    mpz_class c2 = k * c - a, d2 = k * d - b;
    a = c; b = d; c = c2; d = d2;
  }
  return out;
}

inline bool in_farey(const ExtFraction& f, long r) {
  if (f.is_infinite()) return r == 1;
  return f.num() >= 0 && f.den() <= r;
}

// Adjacent elements of F_r around f (f in F_r, 0 < f < inf).  They satisfy the
// mediant identity and Bezout's relation with f.
inline std::pair<ExtFraction, ExtFraction> farey_neighbours(const ExtFraction& f, long r) {
  if (r < 1) throw DomainError("farey order must be >= 1");
  if (f.is_infinite() || !(f > ExtFraction(0, 1)))
    throw DomainError("farey_neighbours needs a finite positive fraction");
  if (!in_farey(f, r))
    throw DomainError(f.str() + " is not in the Farey sequence of order " + std::to_string(r));
  mpz_class c = f.num(), d = f.den();
  if (r == 1) {
    // convention: triples (p-1, p, inf)
    return {ExtFraction(c - 1, 1), ExtFraction::infinity()};
  }
  // left neighbour a/b: bc - ad = 1 with largest b <= r;
  // right neighbour e/g: dg*e ... de - cg = 1 with largest g <= r.
  mpz_class b0, g0, tmp;
  if (d == 1) {
    b0 = 0;  // any b works mod 1
  } else {
    mpz_invert(b0.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());  // b*c = 1 (mod d)
  }
  mpz_class b = b0 + d * ((r - b0) / d);
  mpz_class a = (b * c - 1) / d;
  if (d == 1) {
    g0 = 0;
  } else {
    mpz_invert(tmp.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    g0 = (d - tmp) % d;  // g*c = -1 (mod d)
  }
  mpz_class g = g0 + d * ((r - g0) / d);
  mpz_class e = (g * c + 1) / d;
  return {ExtFraction(a, b), ExtFraction(e, g)};
}

}  // namespace trec
