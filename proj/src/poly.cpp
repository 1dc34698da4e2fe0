#include "skewpbw/poly.hpp"

#include <algorithm>

#include "skewpbw/error.hpp"

namespace skewpbw {

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.isZero() || b.isZero()) return UPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const Rational& k) const {
  if (k == 0) return UPoly();
  UPoly r = *this;
  for (auto& x : r.c_) x *= k;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.isZero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
  const Rational& lb = b.lead();
  for (std::size_t k = quo.size(); k-- > 0;) {
    Rational f = rem[k + b.c_.size() - 1] / lb;
    quo[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::monic() const {
  if (isZero()) return *this;
  return scaled(Rational(1) / lead());
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.isZero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(v));
}

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(UPoly num) : num_(std::move(num)), den_(UPoly::constant(1)) {}

RatFunc::RatFunc(UPoly num, UPoly den) {
  if (den.isZero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (num.isZero()) {
    den_ = UPoly::constant(1);
    return;
  }
  if (den.degree() > 0) {
    UPoly g = UPoly::gcd(num, den);
    if (g.degree() > 0) {
      num = UPoly::divmod(num, g).first;
      den = UPoly::divmod(den, g).first;
    }
  }
  Rational l = den.lead();
  num_ = num.scaled(Rational(1) / l);
  den_ = den.scaled(Rational(1) / l);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.isZero() || b.isZero()) return RatFunc();
  if (a.isPolynomial() && b.isPolynomial()) {
    RatFunc r;
    r.num_ = a.num_ * b.num_ * UPoly::constant(a.den_.lead() * b.den_.lead());
    r.den_ = UPoly::constant(1);
    return r;
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inverse() const {
  if (isZero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero rational function");
  return RatFunc(den_, num_);
}

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.addTerm(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  Exponents e(nvars, 0);
  e.at(index) = 1;
  return term(e, 1);
}

MPoly MPoly::term(const Exponents& e, const Rational& c) {
  MPoly p(e.size());
  p.addTerm(e, c);
  return p;
}

bool MPoly::isConstant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

Rational MPoly::constantTerm() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t MPoly::totalDegree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

void MPoly::addTerm(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.addTerm(e, c);
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [e, c] : b.terms_) r.addTerm(e, -c);
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(a.nvars_);
  Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.addTerm(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::scaled(const Rational& k) const {
  if (k == 0) return MPoly(nvars_);
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c *= k;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(nvars_, 1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace skewpbw
