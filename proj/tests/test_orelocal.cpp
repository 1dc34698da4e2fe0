#include <doctest.h>

#include "support/fixtures.hpp"

using namespace skewpbw;
using fixtures::algebra;
using fixtures::co;
using fixtures::el;
using fixtures::leftFrac;

TEST_CASE("localized maps") {
  const CoeffRing R = CoeffRing::polynomialRing({"t"});
  const Derivation d = Derivation::fromImages({co(R, "1")});
  const Endomorphism id = Endomorphism::identity();
  const CoeffRing K = fractionFieldOf(R);

  auto maps = localizedEndo(R, id, d, {co(R, "t^3"), co(R, "1")});
  CHECK(coeffFractionEq(maps.delta, {co(R, "3*t^2"), co(R, "1")}));
  maps = localizedEndo(R, id, d, {co(R, "1"), co(R, "t")});
  CHECK(coeffFractionEq(maps.delta, {co(R, "-1"), co(R, "t^2")}));
  CHECK(toFractionField(maps.delta, R) == co(K, "-1/t^2"));
  const auto right = localizedEndoRight(R, id, d, {co(R, "1"), co(R, "t")});
  CHECK(coeffFractionEq(right.delta, maps.delta));

  const Endomorphism shift = Endomorphism::fromImages({co(R, "t+1")}, std::vector<Coeff>{co(R, "t-1")});
  maps = localizedEndo(R, shift, Derivation::zero(), {co(R, "1"), co(R, "t")});
  CHECK(coeffFractionEq(maps.sigma, {co(R, "1"), co(R, "t+1")}));
  CHECK(coeffFractionEq(localizedEndoRight(R, shift, Derivation::zero(), {co(R, "1"), co(R, "t")}).sigma, maps.sigma));

  const Endomorphism noInverse = Endomorphism::fromImages({co(R, "2*t")});
  try {
    localizedEndoRight(R, noInverse, Derivation::zero(), {co(R, "1"), co(R, "t")});
    FAIL("expected MissingInverse");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingInverse);
  }
  CHECK_THROWS_AS(localizedEndo(R, id, d, {co(R, "1"), co(R, "0")}), Error);
}

TEST_CASE("left and right localized derivations agree on commutative rings") {
  // sigma(t) = 2t with a matching sigma-derivation delta(t) = t.
  const CoeffRing R = CoeffRing::polynomialRing({"t"});
  const Endomorphism s = Endomorphism::fromImages({co(R, "2*t")}, std::vector<Coeff>{co(R, "1/2*t")});
  const Derivation d = Derivation::fromImages({co(R, "t")});
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const CoeffFraction x{randomCoeff(R, rng, {}), randomCoeff(R, rng, {}, true)};
    const auto l = localizedEndo(R, s, d, x), r = localizedEndoRight(R, s, d, x);
    CHECK(coeffFractionEq(l.sigma, r.sigma));
    CHECK(coeffFractionEq(l.delta, r.delta));
  }
}

TEST_CASE("fraction fields") {
  CHECK(fractionFieldOf(CoeffRing::rationalField()) == CoeffRing::rationalField());
  const CoeffRing R = CoeffRing::polynomialRing({"t"});
  const CoeffRing K = fractionFieldOf(R);
  CHECK(K == CoeffRing::rationalFunctionField("t"));
  const Coeff v = co(K, "(t+1)/(t^2-2)");
  const CoeffFraction back = fromFractionField(v, R);
  CHECK(toFractionField(back, R) == v);
  CHECK(liftToFractionField(co(R, "t^2"), R) == co(K, "t^2"));
  try {
    fractionFieldOf(CoeffRing::polynomialRing({"a", "b"}));
    FAIL("expected UnsupportedFractionField");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedFractionField);
  }
}

TEST_CASE("localized presentations") {
  const Presentation qp = quantumPlanePresentation();
  CHECK(localizePresentation(qp) == qp);

  const Presentation lw = localizePresentation(weylPresentation(1));
  CHECK(lw.ring() == CoeffRing::rationalFunctionField("t"));
  const AlgebraPtr a = Algebra::create(lw);
  CHECK(el(a, "x1") * el(a, "1/t") == el(a, "1/t*x1 - 1/t^2"));

  const AlgebraPtr ls = Algebra::create(localizePresentation(shiftPresentation()));
  CHECK(el(ls, "x1") * el(ls, "1/t") == el(ls, "1/(t+1)*x1"));

  Presentation noninv = shiftPresentation();
  noninv.setSigma(0, Endomorphism::fromImages({parseCoeff("2*t", noninv.ring())}));
  noninv.setFlags(true, false);
  CHECK_THROWS_AS(localizePresentation(noninv), Error);
}

TEST_CASE("Ore solver instances") {
  const AlgebraPtr w = algebra("weyl1");
  const CoeffRing& R = w->ring();
  auto sol = oreSolveLeft(w->zero(), co(R, "t"));
  CHECK(sol.u.isOne());
  CHECK(sol.g.isZero());

  sol = oreSolveLeft(el(w, "x1"), co(R, "t"));
  CHECK(w->constant(sol.u) * el(w, "x1") == sol.g * w->constant(co(R, "t")));
  CHECK(sol.u == co(R, "t^2"));
  CHECK(sol.g == el(w, "t*x1 - 1"));

  auto rs = oreSolveRight(el(w, "x1"), co(R, "t"));
  CHECK(el(w, "x1") * w->constant(rs.u) == w->constant(co(R, "t")) * rs.g);
  rs = oreSolveRight(w->zero(), co(R, "t"));
  CHECK(rs.u.isOne());
  CHECK(rs.g.isZero());

  // Coefficients commute with everything in the Gr of Weyl.
  const AlgebraPtr g = Algebra::create(associatedGradedPresentation(w->presentation()));
  const Element f = el(g, "t*x1^2 + x1");
  sol = oreSolveLeft(f, co(R, "t+1"));
  CHECK(sol.u == co(R, "t+1"));
  CHECK(sol.g == f);

  CHECK_THROWS_AS(oreSolveLeft(el(w, "x1"), co(R, "0")), Error);

  Presentation noninv = shiftPresentation();
  noninv.setSigma(0, Endomorphism::fromImages({parseCoeff("2*t", noninv.ring())}));
  noninv.setFlags(true, false);
  const AlgebraPtr d = Algebra::create(noninv);
  CHECK_NOTHROW(oreSolveLeft(el(d, "x1^2"), co(R, "t")));
  CHECK_THROWS_AS(oreSolveRight(el(d, "x1"), co(R, "t")), Error);
}

TEST_CASE("Ore solvers on random inputs") {
  Rng rng(5);
  for (const auto& name : fixtures::benchmarkNames()) {
    const AlgebraPtr a = algebra(name);
    for (int k = 0; k < 8; ++k) {
      const Element f = randomElement(a, rng, fixtures::small());
      const Coeff s = randomCoeff(a->ring(), rng, fixtures::small(), true);
      const auto l = oreSolveLeft(f, s);
      CHECK_FALSE(l.u.isZero());
      CHECK_MESSAGE(a->constant(l.u) * f == l.g * a->constant(s), name);
      const auto r = oreSolveRight(f, s);
      CHECK_FALSE(r.u.isZero());
      CHECK_MESSAGE(f * a->constant(r.u) == a->constant(s) * r.g, name);
    }
  }
}

TEST_CASE("fraction equality and arithmetic") {
  const AlgebraPtr w = algebra("weyl1");
  const NonzeroCoefficients S(w);
  const Fraction a = leftFrac(w, "t", "t*x1", S);
  CHECK(fracEq(a, a, S));
  CHECK(fracEq(a, embed(el(w, "x1"), Side::Left), S));
  CHECK_FALSE(fracEq(leftFrac(w, "t", "1", S), leftFrac(w, "t", "1+t", S), S));

  const Fraction sum = fracAdd(leftFrac(w, "t", "1", S), leftFrac(w, "t^2", "1", S), S);
  CHECK(fracEq(sum, leftFrac(w, "t^2", "t+1", S), S));
  const Fraction phi = leftFrac(w, "t", "x1", S);
  CHECK(fracEq(fracAdd(phi, fracNeg(phi), S), embed(w->zero(), Side::Left), S));
  CHECK(fracEq(fracAdd(phi, embed(w->zero(), Side::Left), S), phi, S));

  const Fraction prod = fracMul(phi, leftFrac(w, "t", "1", S), S);
  CHECK(fracEq(prod, leftFrac(w, "t^3", "t*x1 - 1", S), S));
  CHECK(fracEq(fracMul(phi, embed(w->one(), Side::Left), S), phi, S));

  const AlgebraPtr g = Algebra::create(associatedGradedPresentation(w->presentation()));
  const NonzeroCoefficients Sg(g);
  CHECK(fracEq(fracMul(leftFrac(g, "t", "x1", Sg), embed(el(g, "t*x1"), Side::Left), Sg),
               leftFrac(g, "t", "t*x1^2", Sg), Sg));

  CHECK_THROWS_AS(makeFraction(Side::Left, el(w, "x1"), el(w, "1"), S), Error);
  CHECK_THROWS_AS(makeFraction(Side::Left, w->zero(), el(w, "1"), S), Error);
  CHECK_THROWS_AS(fracEq(a, embed(el(w, "x1"), Side::Right), S), Error);
}

TEST_CASE("right fractions") {
  const AlgebraPtr w = algebra("weyl1");
  const NonzeroCoefficients S(w);
  const Fraction x = makeFraction(Side::Right, el(w, "t"), el(w, "x1"), S);
  const Fraction y = makeFraction(Side::Right, el(w, "t^2"), el(w, "t*x1 + 1"), S);
  const Fraction x2 = makeFraction(Side::Right, el(w, "t^2"), el(w, "x1*t"), S);
  CHECK(fracEq(x, x2, S));
  const Fraction p = fracMul(x, y, S), q = fracMul(x, y, S, el(w, "t+3"));
  CHECK(fracEq(p, q, S));
  const Fraction s = fracAdd(x, y, S);
  CHECK(fracEq(fracSub(s, y, S), x, S));
}

TEST_CASE("common denominators") {
  const AlgebraPtr w = algebra("weyl1");
  const NonzeroCoefficients S(w);
  const std::vector<Fraction> xs{leftFrac(w, "t", "x1", S), leftFrac(w, "t^2+1", "1", S), leftFrac(w, "2", "x1^2", S)};
  const auto ys = commonDenominator(xs, S);
  REQUIRE(ys.size() == xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(ys[i].denom == ys[0].denom);
    CHECK(fracEq(xs[i], ys[i], S));
  }
}

TEST_CASE("Ore fold can need more steps than terms times degree plus one") {
  const AlgebraPtr w = algebra("weyl2");
  const auto sol = oreSolveLeft(el(w, "x1*x2"), co(w->ring(), "t1*t2"));
  CHECK(sol.steps == 4);
  CHECK(w->constant(sol.u) * el(w, "x1*x2") == sol.g * w->constant(co(w->ring(), "t1*t2")));
}
