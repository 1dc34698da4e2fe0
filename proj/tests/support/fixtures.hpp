#pragma once

#include <string>
#include <vector>

#include "skewpbw/algebras.hpp"
#include "skewpbw/orelocal.hpp"
#include "skewpbw/quantum.hpp"
#include "skewpbw/sampling.hpp"
#include "skewpbw/graded.hpp"
#include "skewpbw/text.hpp"

namespace fixtures {

using namespace skewpbw;

// The consistent benchmark algebras, in catalog order.
inline const std::vector<std::string>& benchmarkNames() {
  static const std::vector<std::string> names{"weyl1", "weyl2", "shift", "quantum-plane", "quantum-space3", "sl2"};
  return names;
}

// Monomial({3}) would pick the length constructor.
inline Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

inline AlgebraPtr algebra(const std::string& name) { return Algebra::create(buildCatalog(name)); }

inline Element el(const AlgebraPtr& a, const std::string& text) { return parseElement(text, a); }
inline Coeff co(const CoeffRing& ring, const std::string& text) { return parseCoeff(text, ring); }

inline Fraction leftFrac(const AlgebraPtr& a, const std::string& s, const std::string& f,
                         const MultiplicativeSet& set) {
  return makeFraction(Side::Left, el(a, s), el(a, f), set);
}

// Small shapes keep the slow algebras (Q[t1,t2] coefficients) quick.
inline SampleShape shapeFor(const std::string& name) {
  SampleShape shape;
  if (name == "weyl2") shape.coeffDegree = 1;
  return shape;
}

inline SampleShape small() {
  SampleShape s;
  s.maxDegree = 2;
  s.maxTerms = 3;
  s.height = 5;
  s.coeffDegree = 1;
  return s;
}

}  // namespace fixtures
