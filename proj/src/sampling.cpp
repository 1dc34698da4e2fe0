#include "skewpbw/sampling.hpp"

namespace skewpbw {

namespace {

unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

UPoly randomUPoly(Rng& rng, unsigned degree, unsigned height, bool nonzero) {
  for (;;) {
    std::vector<Rational> c;
    const unsigned d = uniform(rng, 0, degree);
    for (unsigned i = 0; i <= d; ++i) c.push_back(uniform(rng, 0, 2) == 0 ? Rational(0) : randomRational(rng, height));
    UPoly p(std::move(c));
    if (!nonzero || !p.isZero()) return p;
  }
}

}  // namespace

Rational randomRational(Rng& rng, unsigned height, bool nonzero) {
  for (;;) {
    const long num = std::uniform_int_distribution<long>(-static_cast<long>(height), height)(rng);
    const long den = std::uniform_int_distribution<long>(1, std::max(1U, height))(rng);
    if (nonzero && num == 0) continue;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
}

Coeff randomCoeff(const CoeffRing& ring, Rng& rng, const SampleShape& shape, bool nonzero) {
  switch (ring.kind()) {
    case CoeffRing::Kind::RationalField:
      return ring.constant(randomRational(rng, shape.height, nonzero));
    case CoeffRing::Kind::RationalFunctionField: {
      UPoly num = randomUPoly(rng, shape.coeffDegree, shape.height, nonzero);
      // Mostly polynomials, sometimes a genuine quotient.
      if (uniform(rng, 0, 3) != 0) return Coeff(RatFunc(std::move(num)));
      return Coeff(RatFunc(std::move(num), randomUPoly(rng, 1, shape.height, true)));
    }
    case CoeffRing::Kind::PolynomialRing: {
      const std::size_t k = ring.generatorCount();
      for (;;) {
        MPoly p(k);
        const unsigned terms = uniform(rng, 1, 3);
        for (unsigned t = 0; t < terms; ++t) {
          Exponents e(k, 0);
          unsigned left = uniform(rng, 0, shape.coeffDegree);
          for (std::size_t v = 0; v < k && left > 0; ++v) {
            const unsigned take = (v + 1 == k) ? left : uniform(rng, 0, left);
            e[v] = take;
            left -= take;
          }
          p.addTerm(e, randomRational(rng, shape.height));
        }
        if (!nonzero || !p.isZero()) return Coeff(std::move(p));
      }
    }
  }
  return ring.zero();
}

Monomial randomMonomial(std::size_t n, unsigned maxDegree, Rng& rng) {
  std::vector<std::uint32_t> e(n, 0);
  unsigned left = uniform(rng, 0, maxDegree);
  // Spread the degree over random positions.
  while (left > 0) {
    e[uniform(rng, 0, static_cast<unsigned>(n - 1))] += 1;
    --left;
  }
  return Monomial(std::move(e));
}

Element randomElement(const AlgebraPtr& algebra, Rng& rng, const SampleShape& shape, bool nonzero) {
  for (;;) {
    std::vector<Term> terms;
    const unsigned count = uniform(rng, 1, std::max(1U, shape.maxTerms));
    for (unsigned t = 0; t < count; ++t)
      terms.push_back(Term{randomMonomial(algebra->n(), shape.maxDegree, rng), randomCoeff(algebra->ring(), rng, shape)});
    Element f = algebra->normalize(std::move(terms));
    if (!nonzero || !f.isZero()) return f;
  }
}

}  // namespace skewpbw
