#pragma once

// Seeded random coefficients and elements for property checks.

#include <random>

#include "skewpbw/algebra.hpp"

namespace skewpbw {

struct SampleShape {
  unsigned maxDegree = 4;      // total degree of each monomial
  unsigned maxTerms = 5;
  unsigned height = 10;        // |numerator|, denominator of rationals
  unsigned coeffDegree = 2;    // degree in the ring symbols
};

using Rng = std::mt19937_64;

Rational randomRational(Rng& rng, unsigned height, bool nonzero = false);
// Random value of the ring; rational function fields get a random quotient.
Coeff randomCoeff(const CoeffRing& ring, Rng& rng, const SampleShape& shape, bool nonzero = false);
Monomial randomMonomial(std::size_t n, unsigned maxDegree, Rng& rng);
Element randomElement(const AlgebraPtr& algebra, Rng& rng, const SampleShape& shape, bool nonzero = false);

}  // namespace skewpbw
