#include <doctest.h>

#include "support/fixtures.hpp"
#include "skewpbw/graded.hpp"

using namespace skewpbw;
using fixtures::algebra;
using fixtures::el;

TEST_CASE("filtration membership") {
  const AlgebraPtr w = algebra("weyl1");
  CHECK(inFiltration(w->zero(), 0));
  CHECK(inFiltration(el(w, "t*x1 + 1"), 1));
  CHECK_FALSE(inFiltration(el(w, "x1^2"), 1));
}

TEST_CASE("associated graded presentations") {
  const Presentation gw = associatedGradedPresentation(weylPresentation(1));
  CHECK(gw.quasiCommutative());
  CHECK(gw.bijective());
  CHECK(gw.delta(0).isZero());
  const AlgebraPtr g = Algebra::create(gw);
  CHECK(el(g, "x1") * el(g, "t") == el(g, "t*x1"));

  const Presentation qp = quantumPlanePresentation();
  CHECK(associatedGradedPresentation(qp) == qp);

  const AlgebraPtr gs = Algebra::create(associatedGradedPresentation(sl2Presentation()));
  CHECK(el(gs, "x2*x1") == el(gs, "x1*x2"));
  CHECK(el(gs, "x3*x1") == el(gs, "x1*x3"));

  for (const auto& name : fixtures::benchmarkNames()) {
    const Presentation gr = associatedGradedPresentation(buildCatalog(name));
    CHECK_MESSAGE(checkPresentation(gr).ok(), name);
    CHECK(gr.quasiCommutative());
  }
}

TEST_CASE("principal symbols") {
  const AlgebraPtr w = algebra("weyl1");
  const AlgebraPtr gw = Algebra::create(associatedGradedPresentation(w->presentation()));
  CHECK(principalSymbol(el(w, "t*x1 + 1"), gw) == el(gw, "t*x1"));
  CHECK(principalSymbol(el(w, "x1^2 + t*x1^2"), gw) == el(gw, "(1+t)*x1^2"));
  const AlgebraPtr sl2 = algebra("sl2");
  const AlgebraPtr gs = Algebra::create(associatedGradedPresentation(sl2->presentation()));
  CHECK(principalSymbol(el(sl2, "x1*x2 + x1 + 1"), gs) == el(gs, "x1*x2"));
  try {
    principalSymbol(w->zero(), gw);
    FAIL("expected UndefinedLeader");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UndefinedLeader);
  }
  CHECK_THROWS_AS(principalSymbol(el(w, "x1"), gs), Error);
}

TEST_CASE("symbols multiply when degrees add") {
  Rng rng(11);
  for (const auto& name : fixtures::benchmarkNames()) {
    const AlgebraPtr a = algebra(name);
    const AlgebraPtr g = Algebra::create(associatedGradedPresentation(a->presentation()));
    for (int k = 0; k < 10; ++k) {
      const Element f = randomElement(a, rng, fixtures::small(), true);
      const Element h = randomElement(a, rng, fixtures::small(), true);
      const Element fh = f * h;
      CHECK(fh.degree() <= f.degree() + h.degree());
      if (fh.degree() == f.degree() + h.degree())
        CHECK_MESSAGE(principalSymbol(fh, g) == principalSymbol(f, g) * principalSymbol(h, g), name);
    }
  }
}

TEST_CASE("iterated skew view") {
  const IteratedView qp = iteratedSkewView(quantumPlanePresentation());
  REQUIRE(qp.theta.size() == 2);
  const CoeffRing& K = qp.ring;
  CHECK(qp.theta[0].action.empty());
  CHECK(qp.theta[1].action == std::vector<Coeff>{parseCoeff("q", K)});

  const IteratedView q3 = iteratedSkewView(quantumSpace3Presentation());
  CHECK(q3.theta[2].action == std::vector<Coeff>{parseCoeff("q^2", K), parseCoeff("q^3", K)});

  const IteratedView shift = iteratedSkewView(shiftPresentation());
  REQUIRE(shift.theta.size() == 1);
  CHECK(shift.theta[0].action.empty());
  CHECK(shift.theta[0].sigma == shiftPresentation().sigma(0));

  for (const auto& p : {quantumPlanePresentation(), quantumSpace3Presentation(), shiftPresentation()})
    CHECK(presentationFromView(iteratedSkewView(p)) == p);

  try {
    iteratedSkewView(weylPresentation(1));
    FAIL("expected NotQuasiCommutative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotQuasiCommutative);
  }
}
