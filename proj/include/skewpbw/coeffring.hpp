#pragma once

// Exact commutative coefficient rings R: Q, Q(q) and Q[t1..tk], together with
// their endomorphisms, sigma-derivations and coefficient-level Ore pairs.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewpbw/error.hpp"
#include "skewpbw/poly.hpp"

namespace skewpbw {

// A canonical coefficient value. The alternative held identifies the ring
// kind; operations between different kinds raise RingMismatch.
class Coeff {
 public:
  using Repr = std::variant<Rational, RatFunc, MPoly>;

  Coeff() : repr_(Rational(0)) {}
  explicit Coeff(Rational r) : repr_(std::move(r)) { std::get<Rational>(repr_).canonicalize(); }
  explicit Coeff(RatFunc f) : repr_(std::move(f)) {}
  explicit Coeff(MPoly p) : repr_(std::move(p)) {}

  const Repr& repr() const { return repr_; }

  bool isZero() const;
  bool isOne() const;
  // Units of the shipped rings: nonzero field elements, nonzero constant polynomials.
  bool isUnit() const;
  // The value as a rational, if it is a rational constant of its ring.
  std::optional<Rational> asRational() const;

  Coeff inverse() const;
  // A rational constant in the same ring as this value.
  Coeff scalar(const Rational& r) const;
  Coeff zeroLike() const { return scalar(0); }
  Coeff oneLike() const { return scalar(1); }
  Coeff pow(unsigned e) const;

  Coeff operator-() const;
  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend bool operator==(const Coeff& a, const Coeff& b);
  Coeff& operator+=(const Coeff& b) { return *this = *this + b; }
  Coeff& operator*=(const Coeff& b) { return *this = *this * b; }

 private:
  Repr repr_;
};

class CoeffRing {
 public:
  enum class Kind { RationalField, RationalFunctionField, PolynomialRing };

  static CoeffRing rationalField();
  static CoeffRing rationalFunctionField(std::string parameter);
  static CoeffRing polynomialRing(std::vector<std::string> variables);

  Kind kind() const { return kind_; }
  bool isField() const { return kind_ != Kind::PolynomialRing; }
  // Parameter name (one entry) or polynomial variable names.
  const std::vector<std::string>& symbols() const { return symbols_; }
  // Number of ring generators over Q (0 for Q).
  std::size_t generatorCount() const { return symbols_.size(); }

  Coeff zero() const { return constant(0); }
  Coeff one() const { return constant(1); }
  Coeff constant(const Rational& c) const;
  Coeff generator(std::size_t index) const;

  bool contains(const Coeff& a) const;
  void require(const Coeff& a) const;

  friend bool operator==(const CoeffRing& a, const CoeffRing& b) {
    return a.kind_ == b.kind_ && a.symbols_ == b.symbols_;
  }

 private:
  CoeffRing(Kind kind, std::vector<std::string> symbols) : kind_(kind), symbols_(std::move(symbols)) {}
  Kind kind_;
  std::vector<std::string> symbols_;
};

// Ring endomorphism given by the images of the ring generators; no images
// means the identity. Inverse images, when present, describe sigma^-1.
struct Endomorphism {
  std::optional<std::vector<Coeff>> images;
  std::optional<std::vector<Coeff>> inverseImages;

  static Endomorphism identity() { return {}; }
  static Endomorphism fromImages(std::vector<Coeff> images,
                                 std::optional<std::vector<Coeff>> inverseImages = std::nullopt);

  bool isIdentity() const { return !images.has_value(); }
  bool hasInverse() const { return isIdentity() || inverseImages.has_value(); }
  // sigma^-1 as an endomorphism; throws MissingInverse.
  Endomorphism inverse() const;

  friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
};

// sigma-derivation given by the images of the ring generators; none means zero.
struct Derivation {
  std::optional<std::vector<Coeff>> images;

  static Derivation zero() { return {}; }
  static Derivation fromImages(std::vector<Coeff> images) { return Derivation{std::move(images)}; }
  bool isZero() const { return !images.has_value(); }

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// Throws InvalidMap if the data does not define a valid (invertible, when
// inverse images are given) endomorphism of `ring`.
void validateEndomorphism(const CoeffRing& ring, const Endomorphism& sigma);
// Throws InvalidMap if delta is not a well-defined sigma-derivation of `ring`.
void validateDerivation(const CoeffRing& ring, const Derivation& delta, const Endomorphism& sigma);

Coeff applyEndo(const Endomorphism& sigma, const Coeff& a);
Coeff applyEndoPower(const Endomorphism& sigma, const Coeff& a, long power);
Coeff applyDeriv(const Derivation& delta, const Endomorphism& sigma, const Coeff& a);

// u * a == r * s with u != 0.
struct OrePair {
  Coeff u;
  Coeff r;
};

// Left Ore pair: u * a == r * s. Throws InvalidDenominator for s == 0.
OrePair orePairLeft(const Coeff& a, const Coeff& s, const CoeffRing& ring);
// Right Ore pair: a * u == s * r.
OrePair orePairRight(const Coeff& a, const Coeff& s, const CoeffRing& ring);

}  // namespace skewpbw
