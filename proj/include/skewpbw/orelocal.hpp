#pragma once

// Ore localization at coefficient-level multiplicative sets: localized maps on
// R-fractions, Ore solvers in A, fraction arithmetic and localized presentations.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewpbw/algebra.hpp"

namespace skewpbw {

// a/s with a, s in a commutative coefficient ring.
struct CoeffFraction {
  Coeff num;
  Coeff den;
};

// a/s == b/t in the commutative ring R.
bool coeffFractionEq(const CoeffFraction& x, const CoeffFraction& y);

struct LocalizedMaps {
  CoeffFraction sigma;
  CoeffFraction delta;
};

// sigma-bar(a/s) = sigma(a)/sigma(s)
// delta-bar(a/s) = -(delta(s)/sigma(s))(a/s) + delta(a)/sigma(s)
// Reduced when R has a supported fraction field; otherwise left as computed.
LocalizedMaps localizedEndo(const CoeffRing& ring, const Endomorphism& sigma, const Derivation& delta,
                            const CoeffFraction& x);
// Right-side maps: sigma-tilde(a/s) = sigma(a)/sigma(s),
// delta-tilde(a/s) = -(sigma(a)/sigma(s))(delta(s)/s) + delta(a)/s.
// Throws MissingInverse when sigma has no inverse data.
LocalizedMaps localizedEndoRight(const CoeffRing& ring, const Endomorphism& sigma, const Derivation& delta,
                                 const CoeffFraction& x);

// Q for Q, Q(q) for Q(q), Q(t) for Q[t]; UnsupportedFractionField otherwise.
CoeffRing fractionFieldOf(const CoeffRing& ring);
// a |-> a/1.
Coeff liftToFractionField(const Coeff& a, const CoeffRing& ring);
Coeff toFractionField(const CoeffFraction& x, const CoeffRing& ring);
// Inverse of toFractionField: numerator and denominator back in R.
CoeffFraction fromFractionField(const Coeff& value, const CoeffRing& ring);

// The presentation over Q(R) obtained by inverting all nonzero coefficients:
// every map, constant and tail is lifted as x/1. Requires a bijective p.
Presentation localizePresentation(const Presentation& p);

struct CoeffOreSolution {
  Coeff u;
  Element g;
  std::uint64_t steps = 0;
};

// u f = g s with u != 0 in R.
CoeffOreSolution oreSolveLeft(const Element& f, const Coeff& s);
// f u = s g with u != 0 in R; needs inverse data on every sigma_i.
CoeffOreSolution oreSolveRight(const Element& f, const Coeff& s);

struct OreSolution {
  Element u;  // in S
  Element g;
};

class MultiplicativeSet {
 public:
  virtual ~MultiplicativeSet() = default;
  virtual const AlgebraPtr& algebra() const = 0;
  virtual bool contains(const Element& s) const = 0;
  // u f = g s with u in S. Requires s in S.
  virtual OreSolution solveLeft(const Element& f, const Element& s) const = 0;
  // f u = s g with u in S. Requires s in S.
  virtual OreSolution solveRight(const Element& f, const Element& s) const = 0;
  virtual std::string describe() const = 0;

  void require(const Element& s) const;
};

// S = R \ {0}, embedded as constants of A.
class NonzeroCoefficients final : public MultiplicativeSet {
 public:
  explicit NonzeroCoefficients(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}
  const AlgebraPtr& algebra() const override { return algebra_; }
  bool contains(const Element& s) const override;
  OreSolution solveLeft(const Element& f, const Element& s) const override;
  OreSolution solveRight(const Element& f, const Element& s) const override;
  std::string describe() const override { return "nonzero coefficients"; }

 private:
  AlgebraPtr algebra_;
};

enum class Side { Left, Right };

// Left: denom^-1 * numer. Right: numer * denom^-1.
struct Fraction {
  Side side;
  Element denom;
  Element numer;
};

// Checks denom in S.
Fraction makeFraction(Side side, const Element& denom, const Element& numer, const MultiplicativeSet& set);
// a |-> 1^-1 a (or a 1^-1).
Fraction embed(const Element& a, Side side);

bool fracEq(const Fraction& x, const Fraction& y, const MultiplicativeSet& set);
// The optional witness w in S rescales the Ore pair used (c, d) -> (w c, w d)
// on the left, (c w, d w) on the right; results are equal under fracEq.
Fraction fracAdd(const Fraction& x, const Fraction& y, const MultiplicativeSet& set,
                 const std::optional<Element>& witness = std::nullopt);
Fraction fracMul(const Fraction& x, const Fraction& y, const MultiplicativeSet& set,
                 const std::optional<Element>& witness = std::nullopt);
Fraction fracNeg(const Fraction& x);
Fraction fracSub(const Fraction& x, const Fraction& y, const MultiplicativeSet& set);

// Rewrites every fraction over one shared denominator.
std::vector<Fraction> commonDenominator(const std::vector<Fraction>& xs, const MultiplicativeSet& set);

}  // namespace skewpbw
