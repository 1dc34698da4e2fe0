#include <doctest.h>

#include "support/fixtures.hpp"

using namespace skewpbw;
using fixtures::algebra;
using fixtures::co;
using fixtures::el;
using fixtures::mono;

TEST_CASE("normalize and add") {
  const AlgebraPtr a = algebra("quantum-plane");
  const Coeff one = a->ring().one();
  CHECK(a->normalize({{Monomial({1, 0}), one}, {Monomial({1, 0}), -one}}).isZero());
  const Element f = a->normalize({{Monomial({0, 1}), one}, {Monomial({1, 0}), one}});
  REQUIRE(f.size() == 2);
  CHECK(f.terms()[0].mono == Monomial({1, 0}));
  CHECK(a->normalize({{Monomial({0, 0}), co(a->ring(), "2/3")}}) == a->constant(co(a->ring(), "2/3")));
  CHECK(el(a, "x1+1") + el(a, "x1-1") == el(a, "2*x1"));
  CHECK((el(a, "x1") + el(a, "-x1")).isZero());
  CHECK(el(a, "x1") + a->zero() == el(a, "x1"));
}

TEST_CASE("defining relations") {
  const AlgebraPtr w = algebra("weyl1");
  CHECK(formatElement(el(w, "x1") * el(w, "t")) == "t*x1 + 1");
  CHECK(el(w, "x1^2") * el(w, "t") == el(w, "t*x1^2 + 2*x1"));

  const AlgebraPtr qp = algebra("quantum-plane");
  CHECK(formatElement(el(qp, "x2^2") * el(qp, "x1^2")) == "q^4*x1^2*x2^2");

  const AlgebraPtr sl2 = algebra("sl2");
  CHECK(el(sl2, "x2") * el(sl2, "x1") == el(sl2, "x1*x2 - x3"));
  CHECK(el(sl2, "x3") * el(sl2, "x1") == el(sl2, "x1*x3 + 2*x1"));
  CHECK(el(sl2, "x3") * el(sl2, "x2") == el(sl2, "x2*x3 - 2*x2"));
}

TEST_CASE("sigma alpha") {
  const AlgebraPtr s = algebra("shift");
  const CoeffRing& R = s->ring();
  CHECK(s->sigmaAlpha(mono({0}), co(R, "t^2")) == co(R, "t^2"));
  CHECK(s->sigmaAlpha(mono({3}), co(R, "t")) == co(R, "t+3"));
  CHECK(s->sigmaAlphaInverse(mono({3}), co(R, "t+3")) == co(R, "t"));

  Presentation p(R, 1);
  p.setSigma(0, Endomorphism::fromImages({co(R, "2*t")})).setFlags(true, false);
  const AlgebraPtr d = Algebra::create(p);
  CHECK(d->sigmaAlpha(mono({2}), co(R, "t^2")) == co(R, "16*t^2"));
  CHECK_THROWS_AS(d->sigmaAlphaInverse(mono({1}), co(R, "t")), Error);
}

TEST_CASE("leading splits") {
  const AlgebraPtr w = algebra("weyl1");
  const CoeffRing& R = w->ring();
  auto split = w->monomialTimesCoeff(mono({0}), co(R, "t"));
  CHECK(split.leading == co(R, "t"));
  CHECK(split.rest.isZero());
  split = w->monomialTimesCoeff(mono({1}), co(R, "t"));
  CHECK(split.leading == co(R, "t"));
  CHECK(split.rest == w->one());
  auto mm = w->monomialTimesMonomial(mono({1}), mono({1}));
  CHECK(mm.leading.isOne());
  CHECK(mm.rest.isZero());

  const AlgebraPtr qp = algebra("quantum-plane");
  mm = qp->monomialTimesMonomial(Monomial({0, 2}), Monomial({2, 0}));
  CHECK(mm.leading == co(qp->ring(), "q^4"));
  CHECK(mm.rest.isZero());
  mm = qp->monomialTimesMonomial(Monomial({1, 1}), Monomial({0, 0}));
  CHECK(mm.leading.isOne());
}

TEST_CASE("leading data") {
  const AlgebraPtr qp = algebra("quantum-plane");
  auto ld = qp->leadingData(el(qp, "2*x1 + x2"));
  CHECK(ld.lm == Monomial({1, 0}));
  CHECK(ld.lc == co(qp->ring(), "2"));
  CHECK(ld.degree == 1);
  ld = qp->leadingData(el(qp, "x2^2 + x1"));
  CHECK(ld.lm == Monomial({0, 2}));
  CHECK(ld.degree == 2);
  const AlgebraPtr w = algebra("weyl1");
  ld = w->leadingData(el(w, "t*x1 + 1"));
  CHECK(ld.lm == mono({1}));
  CHECK(ld.lc == co(w->ring(), "t"));
  try {
    (void)qp->leadingData(qp->zero());
    FAIL("expected UndefinedLeader");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UndefinedLeader);
  }
}

TEST_CASE("elements from different algebras do not mix") {
  const AlgebraPtr a = algebra("weyl1");
  const AlgebraPtr b = algebra("weyl1");
  CHECK_THROWS_AS(a->mul(a->generator(0), b->generator(0)), Error);
}

TEST_CASE("rewriting stays within its step bound") {
  const AlgebraPtr sl2 = algebra("sl2");
  const auto [product, stats] = sl2->mulWithStats(el(sl2, "x3^3*x2^2"), el(sl2, "x2*x1^3"));
  CHECK(stats.steps <= stats.bound);
  CHECK(product == el(sl2, "x3^3*x2^2") * el(sl2, "x2*x1^3"));
}

TEST_CASE("random products associate") {
  Rng rng(7);
  for (const auto& name : fixtures::benchmarkNames()) {
    const AlgebraPtr a = algebra(name);
    const SampleShape shape = fixtures::small();
    for (int k = 0; k < 10; ++k) {
      const Element f = randomElement(a, rng, shape), g = randomElement(a, rng, shape), h = randomElement(a, rng, shape);
      CHECK_MESSAGE((f * g) * h == f * (g * h), name);
      CHECK_MESSAGE(f * (g + h) == f * g + f * h, name);
      CHECK_MESSAGE((g + h) * f == g * f + h * f, name);
    }
  }
}

TEST_CASE("create rejects bad data") {
  const CoeffRing R = CoeffRing::polynomialRing({"t"});
  Presentation p(R, 2);
  p.setRelation(0, 1, R.zero());
  try {
    Algebra::create(p);
    FAIL("expected InvalidPresentation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidPresentation);
  }
  CHECK_THROWS(Presentation(R, 2).setRelation(1, 0, R.one()));
}

TEST_CASE("sigma alpha composes on catalog algebras") {
  Rng rng(29);
  for (const auto& name : fixtures::benchmarkNames()) {
    const AlgebraPtr a = algebra(name);
    for (int k = 0; k < 20; ++k) {
      const Monomial alpha = randomMonomial(a->n(), 3, rng), beta = randomMonomial(a->n(), 3, rng);
      const Coeff r = randomCoeff(a->ring(), rng, {});
      CHECK(a->sigmaAlpha(alpha + beta, r) == a->sigmaAlpha(alpha, a->sigmaAlpha(beta, r)));
      CHECK(a->sigmaAlphaInverse(alpha, a->sigmaAlpha(alpha, r)) == r);
    }
  }
}
