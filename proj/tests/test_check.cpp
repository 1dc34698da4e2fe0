#include <doctest.h>

#include <algorithm>

#include "support/fixtures.hpp"

using namespace skewpbw;

namespace {

bool hasViolation(const CheckReport& r, Violation::Kind kind, const std::string& where) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) {
    return v.kind == kind && v.location.find(where) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("catalog presentations are consistent") {
  for (const auto& entry : catalog()) {
    const CheckReport report = checkPresentation(buildCatalog(entry.name), 4);
    CHECK_MESSAGE(report.ok() == entry.consistent, entry.name);
  }
}

TEST_CASE("Jacobi failure is located at the x3 x2 x1 overlap") {
  const CheckReport report = checkPresentation(buildCatalog("sl2-broken"));
  CHECK_FALSE(report.ok());
  CHECK(hasViolation(report, Violation::Kind::Overlap, "x3 x2 x1"));
}

TEST_CASE("zero relation constant is an axiom violation") {
  const CheckReport report = checkPresentation(buildCatalog("zero-constant"));
  CHECK(hasViolation(report, Violation::Kind::Axiom, "c[1,2]"));
}

TEST_CASE("flags must match the data") {
  Presentation p = weylPresentation(1);
  p.setFlags(true, true);
  CHECK(hasViolation(checkPresentation(p), Violation::Kind::Flag, ""));

  Presentation s = shiftPresentation();
  s.setSigma(0, Endomorphism::fromImages({parseCoeff("t+1", s.ring())}));
  CHECK(hasViolation(checkPresentation(s), Violation::Kind::Flag, ""));
}

TEST_CASE("a broken derivation is a map violation") {
  const CoeffRing R = CoeffRing::polynomialRing({"t"});
  Presentation p(R, 1);
  p.setSigma(0, Endomorphism::fromImages({parseCoeff("t+1", R)}, std::vector<Coeff>{parseCoeff("t+2", R)}));
  p.setFlags(true, true);
  CHECK(hasViolation(checkPresentation(p), Violation::Kind::Map, "sigma1"));
}

TEST_CASE("sigma must respect the relation constants") {
  // sigma1 and sigma2 do not commute, so the overlap x2 x1 t fails.
  const CoeffRing R = CoeffRing::polynomialRing({"t"});
  Presentation p(R, 2);
  p.setSigma(0, Endomorphism::fromImages({parseCoeff("t+1", R)}, std::vector<Coeff>{parseCoeff("t-1", R)}));
  p.setRelation(0, 1, parseCoeff("2", R));
  p.setSigma(1, Endomorphism::fromImages({parseCoeff("2*t", R)}, std::vector<Coeff>{parseCoeff("1/2*t", R)}));
  p.setFlags(true, true);
  CHECK_FALSE(checkPresentation(p).ok());
}

TEST_CASE("enveloping algebras of consistent brackets pass") {
  // Heisenberg: [x2, x1] = x3, x3 central.
  const Presentation h = envelopingLiePresentation(3, {{1, 0, {0, 0, 1}}});
  CHECK(checkPresentation(h, 4).ok());
  // so3 written with the antisymmetric reading of [x1, x2] = x3.
  const Presentation so3 =
      envelopingLiePresentation(3, {{0, 1, {0, 0, 1}}, {1, 2, {1, 0, 0}}, {2, 0, {0, 1, 0}}});
  CHECK(checkPresentation(so3, 4).ok());
  // A non-Lie bracket fails.
  const Presentation bad = envelopingLiePresentation(3, {{1, 0, {0, 0, 1}}, {2, 0, {1, 0, 0}}});
  CHECK_FALSE(checkPresentation(bad).ok());
}
