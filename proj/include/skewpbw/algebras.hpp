#pragma once

// Benchmark presentations and brute-force oracles that share no code with the
// rewriting engine.

#include <string>
#include <vector>

#include "skewpbw/algebra.hpp"
#include "skewpbw/quantum.hpp"

namespace skewpbw {

// Q[t1..tn] with x_i t_i = t_i x_i + 1; everything else commutes.
Presentation weylPresentation(std::size_t n);
// Q[t], x t = (t + 1) x.
Presentation shiftPresentation();
// Q(q), x2 x1 = q x1 x2.
Presentation quantumPlanePresentation();
// Q(q), q12 = q, q13 = q^2, q23 = q^3.
Presentation quantumSpace3Presentation();

// [x_j, x_i] = sum_k coeffs[k] x_k.
struct Bracket {
  std::size_t j;
  std::size_t i;
  std::vector<Rational> coeffs;
};
// x_j x_i = x_i x_j + [x_j, x_i] over Q. Pairs not listed commute. A bracket
// given with j < i is read through antisymmetry.
Presentation envelopingLiePresentation(std::size_t dim, const std::vector<Bracket>& brackets);
// Order (e, f, h): [f, e] = -h, [h, e] = 2e, [h, f] = -2f.
Presentation sl2Presentation();

struct CatalogEntry {
  std::string name;
  std::string description;
  // false for the deliberately inconsistent entries
  bool consistent;
};

const std::vector<CatalogEntry>& catalog();
// Throws InvalidArgument for an unknown name.
Presentation buildCatalog(const std::string& name);

// Weyl action on Q[t]: x acts as d/dt, t by multiplication.
UPoly weylOracleApply(const Element& f, const UPoly& p);
// Q(alpha, beta) by sorting the word x^alpha x^beta one adjacent swap at a time.
Coeff torusOracleFactor(const Monomial& alpha, const Monomial& beta, const QMatrix& q);

}  // namespace skewpbw
