#pragma once

// Multiparametric skew quantum spaces, their Laurent localizations at
// S = {unit * x^alpha : alpha supported on x1..xr}, and the dual-route check
// comparing localization with the quantum space over the fraction field.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "skewpbw/orelocal.hpp"

namespace skewpbw {

// q_ii = 1, q_ij q_ji = 1, every entry a unit.
class QMatrix {
 public:
  // Throws InvalidParameterMatrix when the invariants fail.
  QMatrix(CoeffRing ring, std::vector<std::vector<Coeff>> entries);
  // From q_ij for i < j (row-major); q_ji is filled in as q_ij^-1.
  static QMatrix fromUpper(CoeffRing ring, std::size_t n, const std::vector<Coeff>& upper);

  std::size_t n() const { return q_.size(); }
  const CoeffRing& ring() const { return ring_; }
  const Coeff& operator()(std::size_t i, std::size_t j) const { return q_.at(i).at(j); }
  const std::vector<std::vector<Coeff>>& entries() const { return q_; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  CoeffRing ring_;
  std::vector<std::vector<Coeff>> q_;
};

// x_i r = sigma_i(r) x_i and x_j x_i = q_ij x_i x_j. Each sigma_i needs inverse
// data and must fix every q_ij.
Presentation quantumSpacePresentation(const QMatrix& q, const std::vector<Endomorphism>& sigma,
                                      const CoeffRing& ring);

using LaurentMonomial = std::vector<std::int64_t>;

// prod_{i<j} q_ij^(alpha_j beta_i): x^alpha x^beta = Q(alpha, beta) x^(alpha+beta).
Coeff qFactor(const LaurentMonomial& alpha, const LaurentMonomial& beta, const QMatrix& q);

// Higher total degree first, then the first differing exponent larger.
std::strong_ordering compareLaurent(const LaurentMonomial& a, const LaurentMonomial& b);

struct LaurentTerm {
  LaurentMonomial mono;
  Coeff coeff;

  friend bool operator==(const LaurentTerm&, const LaurentTerm&) = default;
};

// Canonical: strictly descending, nonzero coefficients.
struct LaurentElement {
  std::vector<LaurentTerm> terms;

  bool isZero() const { return terms.empty(); }
  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;
};

class QuantumTorus {
 public:
  QuantumTorus(QMatrix q, std::vector<Endomorphism> sigma, std::size_t r);
  // Reads q_ij = c_ij and sigma_i from a quasi-commutative presentation.
  static QuantumTorus fromPresentation(const Presentation& p, std::size_t r);

  std::size_t n() const { return q_.n(); }
  std::size_t r() const { return r_; }
  const CoeffRing& ring() const { return q_.ring(); }
  const QMatrix& q() const { return q_; }
  const std::vector<Endomorphism>& sigma() const { return sigma_; }

  // sigma_1^a1( ... sigma_n^an(c) ... ); negative powers use inverse data.
  Coeff sigmaAlpha(const LaurentMonomial& alpha, const Coeff& c) const;
  Coeff sigmaAlphaInverse(const LaurentMonomial& alpha, const Coeff& c) const;

  // Throws InvalidArgument for a negative exponent outside x1..xr.
  void requireMonomial(const LaurentMonomial& m) const;

  LaurentElement zero() const { return {}; }
  LaurentElement one() const;
  LaurentElement monomial(const LaurentMonomial& m, const Coeff& c) const;
  LaurentElement normalize(std::vector<LaurentTerm> raw) const;
  LaurentElement add(const LaurentElement& f, const LaurentElement& g) const;
  LaurentElement sub(const LaurentElement& f, const LaurentElement& g) const;
  LaurentElement neg(const LaurentElement& f) const;
  // (a x^alpha)(b x^beta) = a sigma^alpha(b) Q(alpha, beta) x^(alpha+beta).
  LaurentElement mul(const LaurentElement& f, const LaurentElement& g) const;
  // Two-sided inverse of a unit times an invertible monomial.
  LaurentElement inverse(const LaurentElement& s) const;

  LaurentElement fromElement(const Element& f) const;
  // Requires natural exponents.
  Element toElement(const LaurentElement& f, const AlgebraPtr& algebra) const;

 private:
  QMatrix q_;
  std::vector<Endomorphism> sigma_;
  std::size_t r_;
};

// S = {u x^alpha : u a unit of R, alpha supported on x1..xr} in a quantum space.
class UnitTimesMonomial final : public MultiplicativeSet {
 public:
  UnitTimesMonomial(AlgebraPtr algebra, std::size_t r);
  const AlgebraPtr& algebra() const override { return algebra_; }
  std::size_t r() const { return torus_.r(); }
  const QuantumTorus& torus() const { return torus_; }
  bool contains(const Element& s) const override;
  OreSolution solveLeft(const Element& f, const Element& s) const override;
  OreSolution solveRight(const Element& f, const Element& s) const override;
  std::string describe() const override;

 private:
  AlgebraPtr algebra_;
  QuantumTorus torus_;
};

// s^-1 a (or a s^-1) as a Laurent element; the denominator must be a unit times
// an invertible monomial.
LaurentElement fractionToLaurent(const Fraction& x, const QuantumTorus& torus);
// Denominator x^beta with beta_i = max(0, -min exponent of x_i).
Fraction laurentToFraction(const LaurentElement& f, const QuantumTorus& torus, const AlgebraPtr& algebra,
                           Side side = Side::Left);

std::string formatLaurent(const LaurentElement& f, const CoeffRing& ring);
// Negative exponents are accepted on x1..xr only.
LaurentElement parseLaurent(std::string_view text, const QuantumTorus& torus);

struct GkReport {
  bool structuralMatch = false;
  std::size_t samples = 0;
  std::size_t agreements = 0;
  std::vector<std::string> notes;

  bool passed() const { return structuralMatch && agreements == samples; }
};

// Route (a): localize the quantum space over R at R \ {0}. Route (b): build the
// quantum space directly over Q(R). Compares the presentations and `samples`
// products of S-fractions, computed by Ore arithmetic along (a) and by the
// torus product along (b). corruptRouteB swaps q12 and q21 in route (b).
GkReport gkStructureCheck(std::size_t r, const QMatrix& q, const std::vector<Endomorphism>& sigma,
                          const CoeffRing& ring, std::size_t samples = 50, std::uint64_t seed = 1,
                          bool corruptRouteB = false);

}  // namespace skewpbw
