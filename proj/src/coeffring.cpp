#include "skewpbw/coeffring.hpp"

#include <set>
#include <stdexcept>

namespace skewpbw {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::RingMismatch: return "ring mismatch";
    case ErrorKind::DivisionByZero: return "division by zero";
    case ErrorKind::NotAUnit: return "not a unit";
    case ErrorKind::InvalidRing: return "invalid ring";
    case ErrorKind::InvalidMap: return "invalid map";
    case ErrorKind::InvalidDenominator: return "invalid denominator";
    case ErrorKind::InvalidPresentation: return "invalid presentation";
    case ErrorKind::PresentationMismatch: return "presentation mismatch";
    case ErrorKind::UndefinedLeader: return "undefined leader";
    case ErrorKind::MissingInverse: return "missing inverse";
    case ErrorKind::NotQuasiCommutative: return "not quasi-commutative";
    case ErrorKind::InvalidParameterMatrix: return "invalid parameter matrix";
    case ErrorKind::UnsupportedFractionField: return "unsupported fraction field";
    case ErrorKind::SideMismatch: return "side mismatch";
    case ErrorKind::NotInMultiplicativeSet: return "not in multiplicative set";
    case ErrorKind::StepBoundExceeded: return "step bound exceeded";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "io error";
  }
  return "error";
}

namespace {

void requireSameRing(const Coeff& a, const Coeff& b) {
  if (a.repr().index() != b.repr().index())
    throw Error(ErrorKind::RingMismatch, "operands belong to different coefficient rings");
  if (const auto* pa = std::get_if<MPoly>(&a.repr())) {
    if (pa->nvars() != std::get<MPoly>(b.repr()).nvars())
      throw Error(ErrorKind::RingMismatch, "polynomial rings with different variable counts");
  }
}

template <class Op>
Coeff combine(const Coeff& a, const Coeff& b, Op op) {
  requireSameRing(a, b);
  return std::visit(
      [&](const auto& x) -> Coeff {
        using T = std::decay_t<decltype(x)>;
        return Coeff(T(op(x, std::get<T>(b.repr()))));
      },
      a.repr());
}

}  // namespace

// ---------------------------------------------------------------------------
// Coeff

bool Coeff::isZero() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>) return x == 0;
        else return x.isZero();
      },
      repr_);
}

bool Coeff::isOne() const {
  auto r = asRational();
  return r && *r == 1;
}

bool Coeff::isUnit() const {
  if (isZero()) return false;
  if (const auto* p = std::get_if<MPoly>(&repr_)) return p->isConstant();
  return true;
}

std::optional<Rational> Coeff::asRational() const {
  if (const auto* r = std::get_if<Rational>(&repr_)) return *r;
  if (const auto* f = std::get_if<RatFunc>(&repr_)) {
    if (f->isPolynomial() && f->num().degree() <= 0) return f->num().coeff(0);
    return std::nullopt;
  }
  const auto& p = std::get<MPoly>(repr_);
  if (p.isConstant()) return p.constantTerm();
  return std::nullopt;
}

Coeff Coeff::inverse() const {
  if (isZero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (const auto* r = std::get_if<Rational>(&repr_)) return Coeff(Rational(1 / *r));
  if (const auto* f = std::get_if<RatFunc>(&repr_)) return Coeff(f->inverse());
  const auto& p = std::get<MPoly>(repr_);
  if (!p.isConstant()) throw Error(ErrorKind::NotAUnit, "non-constant polynomial is not a unit");
  return Coeff(MPoly::constant(p.nvars(), 1 / p.constantTerm()));
}

Coeff Coeff::scalar(const Rational& r) const {
  if (std::holds_alternative<Rational>(repr_)) return Coeff(r);
  if (std::holds_alternative<RatFunc>(repr_)) return Coeff(RatFunc::constant(r));
  return Coeff(MPoly::constant(std::get<MPoly>(repr_).nvars(), r));
}

Coeff Coeff::pow(unsigned e) const {
  Coeff result = oneLike();
  Coeff base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Coeff Coeff::operator-() const {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return Coeff(T(-x));
      },
      repr_);
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Coeff operator-(const Coeff& a, const Coeff& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Coeff operator*(const Coeff& a, const Coeff& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

bool operator==(const Coeff& a, const Coeff& b) { return a.repr_ == b.repr_; }

// ---------------------------------------------------------------------------
// CoeffRing

CoeffRing CoeffRing::rationalField() { return CoeffRing(Kind::RationalField, {}); }

CoeffRing CoeffRing::rationalFunctionField(std::string parameter) {
  if (parameter.empty()) throw Error(ErrorKind::InvalidRing, "empty parameter name");
  return CoeffRing(Kind::RationalFunctionField, {std::move(parameter)});
}

CoeffRing CoeffRing::polynomialRing(std::vector<std::string> variables) {
  if (variables.empty()) throw Error(ErrorKind::InvalidRing, "polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw Error(ErrorKind::InvalidRing, "empty variable name");
    if (!seen.insert(v).second) throw Error(ErrorKind::InvalidRing, "duplicate variable name '" + v + "'");
  }
  return CoeffRing(Kind::PolynomialRing, std::move(variables));
}

Coeff CoeffRing::constant(const Rational& c) const {
  switch (kind_) {
    case Kind::RationalField: return Coeff(c);
    case Kind::RationalFunctionField: return Coeff(RatFunc::constant(c));
    case Kind::PolynomialRing: return Coeff(MPoly::constant(symbols_.size(), c));
  }
  return Coeff(c);
}

Coeff CoeffRing::generator(std::size_t index) const {
  if (index >= symbols_.size()) throw std::out_of_range("ring generator index");
  if (kind_ == Kind::RationalFunctionField) return Coeff(RatFunc(UPoly::monomial(1, 1)));
  return Coeff(MPoly::variable(symbols_.size(), index));
}

bool CoeffRing::contains(const Coeff& a) const {
  switch (kind_) {
    case Kind::RationalField: return std::holds_alternative<Rational>(a.repr());
    case Kind::RationalFunctionField: return std::holds_alternative<RatFunc>(a.repr());
    case Kind::PolynomialRing: {
      const auto* p = std::get_if<MPoly>(&a.repr());
      return p && p->nvars() == symbols_.size();
    }
  }
  return false;
}

void CoeffRing::require(const Coeff& a) const {
  if (!contains(a)) throw Error(ErrorKind::RingMismatch, "value does not belong to the coefficient ring");
}

// ---------------------------------------------------------------------------
// Endomorphisms and derivations

Endomorphism Endomorphism::fromImages(std::vector<Coeff> images,
                                      std::optional<std::vector<Coeff>> inverseImages) {
  return Endomorphism{std::move(images), std::move(inverseImages)};
}

Endomorphism Endomorphism::inverse() const {
  if (isIdentity()) return *this;
  if (!inverseImages) throw Error(ErrorKind::MissingInverse, "endomorphism has no inverse data");
  return Endomorphism{inverseImages, images};
}

namespace {

// Evaluates a univariate polynomial at a rational function by Horner's rule.
RatFunc evalAt(const UPoly& p, const RatFunc& x) {
  RatFunc acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + RatFunc::constant(p.coeffs()[i]);
  return acc;
}

MPoly substitute(const MPoly& p, const std::vector<Coeff>& images) {
  const std::size_t k = p.nvars();
  std::vector<std::vector<MPoly>> powers(k);
  MPoly result(k);
  for (const auto& [e, c] : p.terms()) {
    MPoly term = MPoly::constant(k, c);
    for (std::size_t v = 0; v < k; ++v) {
      if (e[v] == 0) continue;
      auto& cache = powers[v];
      if (cache.empty()) cache.push_back(MPoly::constant(k, 1));
      while (cache.size() <= e[v]) cache.push_back(cache.back() * std::get<MPoly>(images[v].repr()));
      term = term * cache[e[v]];
    }
    result = result + term;
  }
  return result;
}

// delta on a univariate polynomial in the parameter via
// delta(q^e) = sigma(q^(e-1)) delta(q) + delta(q^(e-1)) q.
RatFunc derivPolyParam(const UPoly& p, const RatFunc& sigmaQ, const RatFunc& deltaQ) {
  const RatFunc q(UPoly::monomial(1, 1));
  RatFunc result;
  RatFunc sigmaPow = RatFunc::constant(1);  // sigma(q)^(e-1)
  RatFunc d;                                // delta(q^e)
  for (std::size_t e = 1; e < p.coeffs().size(); ++e) {
    d = sigmaPow * deltaQ + d * q;
    sigmaPow = sigmaPow * sigmaQ;
    if (p.coeffs()[e] != 0) result = result + RatFunc::constant(p.coeffs()[e]) * d;
  }
  return result;
}

}  // namespace

Coeff applyEndo(const Endomorphism& sigma, const Coeff& a) {
  if (sigma.isIdentity()) return a;
  if (std::holds_alternative<Rational>(a.repr())) return a;
  if (const auto* f = std::get_if<RatFunc>(&a.repr())) {
    if (sigma.images->size() != 1) throw Error(ErrorKind::RingMismatch, "endomorphism arity does not match ring");
    const auto& img = std::get<RatFunc>(sigma.images->front().repr());
    if (f->isPolynomial()) return Coeff(evalAt(f->num(), img));
    return Coeff(evalAt(f->num(), img) * evalAt(f->den(), img).inverse());
  }
  const auto& p = std::get<MPoly>(a.repr());
  if (sigma.images->size() != p.nvars())
    throw Error(ErrorKind::RingMismatch, "endomorphism arity does not match ring");
  return Coeff(substitute(p, *sigma.images));
}

Coeff applyEndoPower(const Endomorphism& sigma, const Coeff& a, long power) {
  if (sigma.isIdentity() || power == 0) return a;
  Endomorphism step = power > 0 ? sigma : sigma.inverse();
  Coeff r = a;
  for (long i = 0; i < (power > 0 ? power : -power); ++i) r = applyEndo(step, r);
  return r;
}

Coeff applyDeriv(const Derivation& delta, const Endomorphism& sigma, const Coeff& a) {
  if (delta.isZero() || std::holds_alternative<Rational>(a.repr())) return a.zeroLike();
  if (const auto* f = std::get_if<RatFunc>(&a.repr())) {
    const RatFunc q(UPoly::monomial(1, 1));
    const RatFunc sigmaQ = sigma.isIdentity() ? q : std::get<RatFunc>(sigma.images->front().repr());
    const RatFunc deltaQ = std::get<RatFunc>(delta.images->front().repr());
    RatFunc dNum = derivPolyParam(f->num(), sigmaQ, deltaQ);
    if (f->isPolynomial()) return Coeff(dNum);
    // a/s  |->  -(delta(s)/sigma(s)) (a/s) + delta(a)/sigma(s)
    RatFunc dDen = derivPolyParam(f->den(), sigmaQ, deltaQ);
    RatFunc sigmaDenInv = evalAt(f->den(), sigmaQ).inverse();
    return Coeff(-(dDen * sigmaDenInv) * *f + dNum * sigmaDenInv);
  }
  const auto& p = std::get<MPoly>(a.repr());
  const std::size_t k = p.nvars();
  if (delta.images->size() != k) throw Error(ErrorKind::RingMismatch, "derivation arity does not match ring");
  std::vector<Coeff> sigmaGen(k);
  for (std::size_t v = 0; v < k; ++v)
    sigmaGen[v] = sigma.isIdentity() ? Coeff(MPoly::variable(k, v)) : (*sigma.images)[v];
  Coeff result = a.zeroLike();
  for (const auto& [e, c] : p.terms()) {
    // Walk the word t_1^e1 ... t_k^ek keeping (sigma(m), delta(m), m).
    Coeff sm = a.oneLike(), dm = a.zeroLike(), m = a.oneLike();
    for (std::size_t v = 0; v < k; ++v) {
      const Coeff tv(MPoly::variable(k, v));
      for (std::uint32_t j = 0; j < e[v]; ++j) {
        dm = sm * (*delta.images)[v] + dm * tv;
        sm = sm * sigmaGen[v];
        m = m * tv;
      }
    }
    result = result + a.scalar(c) * dm;
  }
  return result;
}

void validateEndomorphism(const CoeffRing& ring, const Endomorphism& sigma) {
  if (sigma.isIdentity()) return;
  if (ring.kind() == CoeffRing::Kind::RationalField)
    throw Error(ErrorKind::InvalidMap, "Q admits only the identity endomorphism");
  auto checkImages = [&](const std::vector<Coeff>& imgs, const char* what) {
    if (imgs.size() != ring.generatorCount())
      throw Error(ErrorKind::InvalidMap, std::string(what) + " count does not match ring generators");
    for (const auto& c : imgs) {
      if (!ring.contains(c)) throw Error(ErrorKind::InvalidMap, std::string(what) + " outside the ring");
    }
  };
  checkImages(*sigma.images, "image");
  if (ring.kind() == CoeffRing::Kind::RationalFunctionField || ring.generatorCount() == 1) {
    const Coeff& img = sigma.images->front();
    if (img.asRational())
      throw Error(ErrorKind::InvalidMap, "constant image makes the endomorphism non-injective");
  }
  if (!sigma.inverseImages) return;
  checkImages(*sigma.inverseImages, "inverse image");
  const Endomorphism inv = sigma.inverse();
  for (std::size_t v = 0; v < ring.generatorCount(); ++v) {
    const Coeff t = ring.generator(v);
    if (!(applyEndo(sigma, applyEndo(inv, t)) == t) || !(applyEndo(inv, applyEndo(sigma, t)) == t))
      throw Error(ErrorKind::InvalidMap, "inverse images do not invert the endomorphism on " + ring.symbols()[v]);
  }
}

void validateDerivation(const CoeffRing& ring, const Derivation& delta, const Endomorphism& sigma) {
  if (delta.isZero()) return;
  if (ring.kind() == CoeffRing::Kind::RationalField)
    throw Error(ErrorKind::InvalidMap, "Q admits only the zero derivation");
  const auto& imgs = *delta.images;
  if (imgs.size() != ring.generatorCount())
    throw Error(ErrorKind::InvalidMap, "derivation image count does not match ring generators");
  for (const auto& c : imgs) {
    if (!ring.contains(c)) throw Error(ErrorKind::InvalidMap, "derivation image outside the ring");
  }
  // delta(t_v t_w) must not depend on the factor order.
  for (std::size_t v = 0; v < ring.generatorCount(); ++v) {
    for (std::size_t w = v + 1; w < ring.generatorCount(); ++w) {
      const Coeff tv = ring.generator(v), tw = ring.generator(w);
      const Coeff lhs = applyEndo(sigma, tv) * imgs[w] + imgs[v] * tw;
      const Coeff rhs = applyEndo(sigma, tw) * imgs[v] + imgs[w] * tv;
      if (!(lhs == rhs))
        throw Error(ErrorKind::InvalidMap, "derivation is not well defined on " + ring.symbols()[v] + "*" +
                                               ring.symbols()[w]);
    }
  }
}

// ---------------------------------------------------------------------------
// Coefficient Ore pairs

OrePair orePairLeft(const Coeff& a, const Coeff& s, const CoeffRing& ring) {
  ring.require(a);
  ring.require(s);
  if (s.isZero()) throw Error(ErrorKind::InvalidDenominator, "zero denominator");
  OrePair p = ring.isField() ? OrePair{ring.one(), a * s.inverse()} : OrePair{s, a};
  if (p.u.isZero() || !(p.u * a == p.r * s)) throw std::logic_error("left Ore pair failed verification");
  return p;
}

OrePair orePairRight(const Coeff& a, const Coeff& s, const CoeffRing& ring) {
  ring.require(a);
  ring.require(s);
  if (s.isZero()) throw Error(ErrorKind::InvalidDenominator, "zero denominator");
  OrePair p = ring.isField() ? OrePair{ring.one(), s.inverse() * a} : OrePair{s, a};
  if (p.u.isZero() || !(a * p.u == s * p.r)) throw std::logic_error("right Ore pair failed verification");
  return p;
}

}  // namespace skewpbw
