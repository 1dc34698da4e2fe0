#pragma once

// Exact polynomial types over Q used as coefficient representations.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace skewpbw {

using Rational = mpq_class;

// Dense univariate polynomial; coeffs()[i] multiplies t^i. No trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, std::size_t degree);

  bool isZero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Rational& k) const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  // Quotient and remainder; b must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b);
  UPoly monic() const;
  UPoly derivative() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Univariate rational function num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UPoly::constant(1)) {}
  explicit RatFunc(UPoly num);
  RatFunc(UPoly num, UPoly den);

  static RatFunc constant(const Rational& c) { return RatFunc(UPoly::constant(c)); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool isZero() const { return num_.isZero(); }
  bool isPolynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  UPoly num_;
  UPoly den_;
};

using Exponents = std::vector<std::uint32_t>;

// Sparse multivariate polynomial in a fixed number of variables, terms keyed
// by exponent vector in lexicographic order.
class MPoly {
 public:
  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly term(const Exponents& e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  Rational constantTerm() const;
  std::uint32_t totalDegree() const;

  void addTerm(const Exponents& e, const Rational& c);

  MPoly operator-() const;
  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const Rational& k) const;
  MPoly pow(unsigned e) const;
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace skewpbw
