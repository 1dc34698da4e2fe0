#include "skewpbw/orelocal.hpp"

#include <stdexcept>

namespace skewpbw {

namespace {

UPoly toUPoly(const MPoly& p) {
  std::vector<Rational> c;
  for (const auto& [e, v] : p.terms()) {
    if (c.size() <= e[0]) c.resize(e[0] + 1);
    c[e[0]] = v;
  }
  return UPoly(std::move(c));
}

MPoly toMPoly(const UPoly& p) {
  MPoly out(1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) out.addTerm({static_cast<std::uint32_t>(i)}, p.coeffs()[i]);
  return out;
}

bool hasFractionField(const CoeffRing& ring) {
  return ring.kind() != CoeffRing::Kind::PolynomialRing || ring.generatorCount() == 1;
}

CoeffFraction reduce(const CoeffRing& ring, CoeffFraction x) {
  if (!hasFractionField(ring)) return x;
  return fromFractionField(toFractionField(x, ring), ring);
}

void requireDenominator(const CoeffRing& ring, const CoeffFraction& x) {
  ring.require(x.num);
  ring.require(x.den);
  if (x.den.isZero()) throw Error(ErrorKind::InvalidDenominator, "zero denominator");
}

std::uint64_t monomialCount(int degree, std::size_t n) {
  // C(degree + n, n), the number of standard monomials of degree <= degree.
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= n; ++i) r = r * (static_cast<std::uint64_t>(std::max(degree, 0)) + i) / i;
  return r;
}

Coeff requireCoeffDenominator(const Element& s) {
  if (!s.isConstant() || s.isZero())
    throw Error(ErrorKind::NotInMultiplicativeSet, "denominator is not a nonzero coefficient");
  return s.terms().front().coeff;
}

void requireSameSide(const Fraction& x, const Fraction& y) {
  if (x.side != y.side) throw Error(ErrorKind::SideMismatch, "left and right fractions cannot be combined");
}

OreSolution scaled(OreSolution sol, const std::optional<Element>& w, Side side, const MultiplicativeSet& set) {
  if (!w) return sol;
  set.require(*w);
  const Algebra& a = *set.algebra();
  if (side == Side::Left) return {a.mul(*w, sol.u), a.mul(*w, sol.g)};
  return {a.mul(sol.u, *w), a.mul(sol.g, *w)};
}

}  // namespace

bool coeffFractionEq(const CoeffFraction& x, const CoeffFraction& y) { return x.num * y.den == y.num * x.den; }

LocalizedMaps localizedEndo(const CoeffRing& ring, const Endomorphism& sigma, const Derivation& delta,
                            const CoeffFraction& x) {
  requireDenominator(ring, x);
  const Coeff& a = x.num;
  const Coeff& s = x.den;
  const Coeff sa = applyEndo(sigma, a), ss = applyEndo(sigma, s);
  const Coeff da = applyDeriv(delta, sigma, a), ds = applyDeriv(delta, sigma, s);
  // (delta(a) s - delta(s) a) / (sigma(s) s)
  return {reduce(ring, {sa, ss}), reduce(ring, {da * s - ds * a, ss * s})};
}

LocalizedMaps localizedEndoRight(const CoeffRing& ring, const Endomorphism& sigma, const Derivation& delta,
                                 const CoeffFraction& x) {
  requireDenominator(ring, x);
  if (!sigma.hasInverse()) throw Error(ErrorKind::MissingInverse, "right localization needs a bijective sigma");
  const Coeff& a = x.num;
  const Coeff& s = x.den;
  const Coeff sa = applyEndo(sigma, a), ss = applyEndo(sigma, s);
  const Coeff da = applyDeriv(delta, sigma, a), ds = applyDeriv(delta, sigma, s);
  // (delta(a) sigma(s) - sigma(a) delta(s)) / (sigma(s) s)
  return {reduce(ring, {sa, ss}), reduce(ring, {da * ss - sa * ds, ss * s})};
}

CoeffRing fractionFieldOf(const CoeffRing& ring) {
  if (ring.isField()) return ring;
  if (ring.generatorCount() != 1)
    throw Error(ErrorKind::UnsupportedFractionField, "fraction fields of multivariate polynomial rings are not supported");
  return CoeffRing::rationalFunctionField(ring.symbols().front());
}

Coeff liftToFractionField(const Coeff& a, const CoeffRing& ring) {
  ring.require(a);
  if (ring.isField()) return a;
  fractionFieldOf(ring);
  return Coeff(RatFunc(toUPoly(std::get<MPoly>(a.repr()))));
}

Coeff toFractionField(const CoeffFraction& x, const CoeffRing& ring) {
  requireDenominator(ring, x);
  return liftToFractionField(x.num, ring) * liftToFractionField(x.den, ring).inverse();
}

CoeffFraction fromFractionField(const Coeff& value, const CoeffRing& ring) {
  const CoeffRing field = fractionFieldOf(ring);
  field.require(value);
  if (ring.isField()) return {value, ring.one()};
  const auto& f = std::get<RatFunc>(value.repr());
  return {Coeff(toMPoly(f.num())), Coeff(toMPoly(f.den()))};
}

Presentation localizePresentation(const Presentation& p) {
  if (!p.bijective()) throw Error(ErrorKind::InvalidPresentation, "localization needs a bijective presentation");
  const CoeffRing& ring = p.ring();
  const CoeffRing field = fractionFieldOf(ring);
  if (field == ring) return p;

  auto lift = [&](const Coeff& c) { return liftToFractionField(c, ring); };
  auto liftAll = [&](const std::optional<std::vector<Coeff>>& v) -> std::optional<std::vector<Coeff>> {
    if (!v) return std::nullopt;
    std::vector<Coeff> out;
    for (const auto& c : *v) out.push_back(lift(c));
    return out;
  };

  Presentation out(field, p.n());
  for (std::size_t i = 0; i < p.n(); ++i) {
    const Endomorphism& s = p.sigma(i);
    if (!s.isIdentity()) out.setSigma(i, Endomorphism{liftAll(s.images), liftAll(s.inverseImages)});
    out.setDelta(i, Derivation{liftAll(p.delta(i).images)});
  }
  for (std::size_t i = 0; i < p.n(); ++i) {
    for (std::size_t j = i + 1; j < p.n(); ++j) {
      const Tail& t = p.tail(i, j);
      Tail lt{lift(t.constant), {}};
      for (const auto& d : t.linear) lt.linear.push_back(lift(d));
      out.setRelation(i, j, lift(p.c(i, j)), std::move(lt));
    }
  }
  out.setFlags(p.quasiCommutative(), p.bijective());
  return out;
}

// ---------------------------------------------------------------------------
// Ore solvers

namespace {

struct OreStep {
  Monomial alpha;
  Coeff u1;
  Coeff r;
};

// Each step removes the current leader; the remainder stays below it, so the
// number of steps is at most the number of standard monomials of degree <= deg f.
void checkStepBound(std::uint64_t steps, const Element& f) {
  const std::uint64_t bound = monomialCount(f.degree(), f.algebra()->n());
  if (steps > bound)
    throw Error(ErrorKind::StepBoundExceeded, "Ore solver exceeded " + std::to_string(bound) + " steps");
}

}  // namespace

namespace {

// s commutes with every x_i, so (s, f) already solves both sides.
bool isCentral(const Algebra& a, const Coeff& s) {
  for (std::size_t i = 0; i < a.n(); ++i) {
    const Presentation& p = a.presentation();
    if (!(applyEndo(p.sigma(i), s) == s) || !applyDeriv(p.delta(i), p.sigma(i), s).isZero()) return false;
  }
  return true;
}

}  // namespace

CoeffOreSolution oreSolveLeft(const Element& f, const Coeff& s) {
  const Algebra& a = *f.algebra();
  a.ring().require(s);
  if (s.isZero()) throw Error(ErrorKind::NotInMultiplicativeSet, "zero is not a denominator");
  if (isCentral(a, s)) return {s, f, 0};

  std::vector<OreStep> steps;
  Element cur = f;
  while (!cur.isZero()) {
    const Term lt = cur.terms().front();
    // u1 c = r sigma^alpha(s), so u1 cur and r x^alpha s share their leading term.
    const OrePair pr = orePairLeft(lt.coeff, a.sigmaAlpha(lt.mono, s), a.ring());
    Element next = a.sub(cur.leftScaled(pr.u), a.mul(a.monomial(lt.mono, pr.r), a.constant(s)));
    if (!next.isZero() && compareMonomials(next.terms().front().mono, lt.mono) >= 0)
      throw std::logic_error("left Ore step did not lower the leader");
    steps.push_back({lt.mono, pr.u, pr.r});
    checkStepBound(steps.size(), f);
    cur = std::move(next);
  }

  Coeff u = a.ring().one();
  Element g = a.zero();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    g = a.add(a.monomial(it->alpha, u * it->r), g);
    u = u * it->u1;
  }
  if (!(a.mul(a.constant(u), f) == a.mul(g, a.constant(s))))
    throw std::logic_error("left Ore solution failed verification");
  return {u, g, steps.size()};
}

CoeffOreSolution oreSolveRight(const Element& f, const Coeff& s) {
  const Algebra& a = *f.algebra();
  a.ring().require(s);
  if (s.isZero()) throw Error(ErrorKind::NotInMultiplicativeSet, "zero is not a denominator");
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (!a.presentation().sigma(i).hasInverse())
      throw Error(ErrorKind::MissingInverse, "right Ore solver needs inverse data for sigma" + std::to_string(i + 1));
  }
  if (isCentral(a, s)) return {s, f, 0};

  std::vector<OreStep> steps;
  Element cur = f;
  while (!cur.isZero()) {
    const Term lt = cur.terms().front();
    // c u1 = s r; cur sigma^-alpha(u1) and s r x^alpha share their leading term.
    const OrePair pr = orePairRight(lt.coeff, s, a.ring());
    const Coeff twisted = a.sigmaAlphaInverse(lt.mono, pr.u);
    Element next = a.sub(a.mul(cur, a.constant(twisted)), a.monomial(lt.mono, s * pr.r));
    if (!next.isZero() && compareMonomials(next.terms().front().mono, lt.mono) >= 0)
      throw std::logic_error("right Ore step did not lower the leader");
    steps.push_back({lt.mono, twisted, pr.r});
    checkStepBound(steps.size(), f);
    cur = std::move(next);
  }

  Coeff u = a.ring().one();
  Element g = a.zero();
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    g = a.add(a.mul(a.monomial(it->alpha, it->r), a.constant(u)), g);
    u = it->u1 * u;
  }
  if (!(a.mul(f, a.constant(u)) == a.mul(a.constant(s), g)))
    throw std::logic_error("right Ore solution failed verification");
  return {u, g, steps.size()};
}

// ---------------------------------------------------------------------------
// Multiplicative sets

void MultiplicativeSet::require(const Element& s) const {
  algebra()->requireOwn(s);
  if (!contains(s)) throw Error(ErrorKind::NotInMultiplicativeSet, "element is not in " + describe());
}

bool NonzeroCoefficients::contains(const Element& s) const {
  return s.algebra() == algebra_ && s.isConstant() && !s.isZero();
}

OreSolution NonzeroCoefficients::solveLeft(const Element& f, const Element& s) const {
  require(s);
  algebra_->requireOwn(f);
  auto sol = oreSolveLeft(f, requireCoeffDenominator(s));
  return {algebra_->constant(sol.u), std::move(sol.g)};
}

OreSolution NonzeroCoefficients::solveRight(const Element& f, const Element& s) const {
  require(s);
  algebra_->requireOwn(f);
  auto sol = oreSolveRight(f, requireCoeffDenominator(s));
  return {algebra_->constant(sol.u), std::move(sol.g)};
}

// ---------------------------------------------------------------------------
// Fractions

Fraction makeFraction(Side side, const Element& denom, const Element& numer, const MultiplicativeSet& set) {
  set.require(denom);
  set.algebra()->requireOwn(numer);
  return Fraction{side, denom, numer};
}

Fraction embed(const Element& a, Side side) { return Fraction{side, a.algebra()->one(), a}; }

bool fracEq(const Fraction& x, const Fraction& y, const MultiplicativeSet& set) {
  requireSameSide(x, y);
  const Algebra& a = *set.algebra();
  if (x.side == Side::Left) {
    // c s = d t in S; compare c a with d b.
    const OreSolution w = set.solveLeft(x.denom, y.denom);
    return a.mul(w.u, x.numer) == a.mul(w.g, y.numer);
  }
  const OreSolution w = set.solveRight(x.denom, y.denom);
  return a.mul(x.numer, w.u) == a.mul(y.numer, w.g);
}

Fraction fracAdd(const Fraction& x, const Fraction& y, const MultiplicativeSet& set,
                 const std::optional<Element>& witness) {
  requireSameSide(x, y);
  const Algebra& a = *set.algebra();
  if (x.side == Side::Left) {
    const OreSolution w = scaled(set.solveLeft(x.denom, y.denom), witness, Side::Left, set);
    return Fraction{Side::Left, a.mul(w.u, x.denom), a.add(a.mul(w.u, x.numer), a.mul(w.g, y.numer))};
  }
  const OreSolution w = scaled(set.solveRight(x.denom, y.denom), witness, Side::Right, set);
  return Fraction{Side::Right, a.mul(x.denom, w.u), a.add(a.mul(x.numer, w.u), a.mul(y.numer, w.g))};
}

Fraction fracMul(const Fraction& x, const Fraction& y, const MultiplicativeSet& set,
                 const std::optional<Element>& witness) {
  requireSameSide(x, y);
  const Algebra& a = *set.algebra();
  if (x.side == Side::Left) {
    // (s^-1 a)(t^-1 b) = (u s)^-1 (c b) where u a = c t.
    const OreSolution w = scaled(set.solveLeft(x.numer, y.denom), witness, Side::Left, set);
    return Fraction{Side::Left, a.mul(w.u, x.denom), a.mul(w.g, y.numer)};
  }
  // (a s^-1)(b t^-1) = (a g)(t u)^-1 where b u = s g.
  const OreSolution w = scaled(set.solveRight(y.numer, x.denom), witness, Side::Right, set);
  return Fraction{Side::Right, a.mul(y.denom, w.u), a.mul(x.numer, w.g)};
}

Fraction fracNeg(const Fraction& x) { return Fraction{x.side, x.denom, -x.numer}; }

Fraction fracSub(const Fraction& x, const Fraction& y, const MultiplicativeSet& set) {
  return fracAdd(x, fracNeg(y), set);
}

std::vector<Fraction> commonDenominator(const std::vector<Fraction>& xs, const MultiplicativeSet& set) {
  if (xs.empty()) return {};
  const Algebra& a = *set.algebra();
  const Side side = xs.front().side;
  std::vector<Fraction> out{xs.front()};
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const Fraction& x = xs[k];
    if (x.side != side) throw Error(ErrorKind::SideMismatch, "left and right fractions cannot be combined");
    const Element& d = out.front().denom;
    if (side == Side::Left) {
      // u s = g D: rescale the new fraction by u and the earlier ones by g.
      const OreSolution w = set.solveLeft(x.denom, d);
      for (auto& y : out) y = Fraction{side, a.mul(w.g, y.denom), a.mul(w.g, y.numer)};
      out.push_back(Fraction{side, a.mul(w.u, x.denom), a.mul(w.u, x.numer)});
    } else {
      const OreSolution w = set.solveRight(x.denom, d);
      for (auto& y : out) y = Fraction{side, a.mul(y.denom, w.g), a.mul(y.numer, w.g)};
      out.push_back(Fraction{side, a.mul(x.denom, w.u), a.mul(x.numer, w.u)});
    }
  }
  return out;
}

}  // namespace skewpbw
