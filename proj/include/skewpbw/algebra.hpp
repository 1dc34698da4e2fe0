#pragma once

// Normal-form arithmetic in a skew PBW extension given by a Presentation.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewpbw/monomial.hpp"
#include "skewpbw/presentation.hpp"

namespace skewpbw {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// Canonical element: terms strictly descending in monomial order, nonzero
// coefficients. Zero is the empty sum. Immutable.
class Element {
 public:
  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Maximum total degree of a term; -1 for zero.
  int degree() const;
  bool isConstant() const { return degree() <= 0; }
  // Coefficient of x^m (zero of the ring when absent).
  Coeff coeffOf(const Monomial& m) const;

  Element operator-() const;
  friend Element operator+(const Element& f, const Element& g);
  friend Element operator-(const Element& f, const Element& g);
  friend Element operator*(const Element& f, const Element& g);
  friend bool operator==(const Element& f, const Element& g);

  // r * f for a coefficient r acting on the left.
  Element leftScaled(const Coeff& r) const;

 private:
  friend class Algebra;
  Element(AlgebraPtr algebra, std::vector<Term> terms) : algebra_(std::move(algebra)), terms_(std::move(terms)) {}

  AlgebraPtr algebra_;
  std::vector<Term> terms_;
};

struct LeadingData {
  Monomial lm;
  Coeff lc;
  std::uint32_t degree;
};

// Result of x^alpha r = r_alpha x^alpha + p or x^alpha x^beta = c x^(alpha+beta) + p.
struct LeadingSplit {
  Coeff leading;
  Element rest;
};

struct MulStats {
  std::uint64_t steps = 0;
  std::uint64_t bound = 0;
};

class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  // Validates the presentation with checkPresentation; throws
  // InvalidPresentation listing the violations.
  static AlgebraPtr create(Presentation p);
  // Only checks that the data is well formed (sizes, ring membership).
  static AlgebraPtr createUnchecked(Presentation p);

  const Presentation& presentation() const { return p_; }
  const CoeffRing& ring() const { return p_.ring(); }
  std::size_t n() const { return p_.n(); }

  Element zero() const;
  Element one() const;
  Element constant(const Coeff& c) const;
  Element generator(std::size_t i) const;
  Element monomial(const Monomial& m, const Coeff& c) const;
  Element monomial(const Monomial& m) const { return monomial(m, ring().one()); }
  // Merges, sorts and drops zeros.
  Element normalize(std::vector<Term> rawTerms) const;

  Element add(const Element& f, const Element& g) const;
  Element sub(const Element& f, const Element& g) const;
  Element mul(const Element& f, const Element& g) const;
  // Same product, also reporting the rewriting step count and its bound.
  std::pair<Element, MulStats> mulWithStats(const Element& f, const Element& g) const;

  // sigma^alpha(r) = sigma_1^a1( ... sigma_n^an(r) ... ).
  Coeff sigmaAlpha(const Monomial& alpha, const Coeff& r) const;
  // Inverse of sigmaAlpha; needs inverse data on every sigma_i involved.
  Coeff sigmaAlphaInverse(const Monomial& alpha, const Coeff& r) const;

  LeadingSplit monomialTimesCoeff(const Monomial& alpha, const Coeff& r) const;
  LeadingSplit monomialTimesMonomial(const Monomial& alpha, const Monomial& beta) const;

  LeadingData leadingData(const Element& f) const;

  void requireOwn(const Element& f) const;

 private:
  explicit Algebra(Presentation p) : p_(std::move(p)) {}

  using TermList = std::vector<Term>;
  struct Budget {
    std::uint64_t steps = 0;
    std::uint64_t bound = 0;
    void step();
  };
  struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
  };

  Element wrap(TermList terms) const { return Element(shared_from_this(), std::move(terms)); }

  std::vector<Coeff> skewPower(std::size_t k, std::uint32_t m, const Coeff& c) const;
  TermList monoTimesCoeff(const Monomial& alpha, const Coeff& r) const;
  const TermList& monoTimesGen(const Monomial& alpha, std::size_t j, Budget& budget) const;
  const TermList& monoTimesMono(const Monomial& alpha, const Monomial& beta, Budget& budget) const;
  std::uint64_t stepBound(int degree) const;

  Presentation p_;

  mutable std::mutex cacheMutex_;
  mutable std::unordered_map<std::vector<std::uint32_t>, std::shared_ptr<const TermList>, VecHash> genCache_;
  mutable std::unordered_map<std::vector<std::uint32_t>, std::shared_ptr<const TermList>, VecHash> monoCache_;
};

}  // namespace skewpbw
