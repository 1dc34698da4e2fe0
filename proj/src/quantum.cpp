#include "skewpbw/quantum.hpp"

#include <algorithm>
#include <map>

#include "expr_parser.hpp"
#include "skewpbw/sampling.hpp"
#include "skewpbw/text.hpp"

namespace skewpbw {

namespace {

Coeff intPow(const Coeff& c, std::int64_t e) {
  if (e >= 0) return c.pow(static_cast<unsigned>(e));
  return c.inverse().pow(static_cast<unsigned>(-e));
}

struct LaurentDescending {
  bool operator()(const LaurentMonomial& a, const LaurentMonomial& b) const { return compareLaurent(a, b) > 0; }
};

LaurentMonomial toLaurent(const Monomial& m) {
  return LaurentMonomial(m.exponents().begin(), m.exponents().end());
}

LaurentMonomial plus(const LaurentMonomial& a, const LaurentMonomial& b) {
  LaurentMonomial s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

LaurentMonomial negated(const LaurentMonomial& a) {
  LaurentMonomial s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// QMatrix and the quantum space

QMatrix::QMatrix(CoeffRing ring, std::vector<std::vector<Coeff>> entries) : ring_(std::move(ring)), q_(std::move(entries)) {
  const std::size_t n = q_.size();
  if (n == 0) throw Error(ErrorKind::InvalidParameterMatrix, "empty parameter matrix");
  for (const auto& row : q_) {
    if (row.size() != n) throw Error(ErrorKind::InvalidParameterMatrix, "parameter matrix must be square");
    for (const auto& c : row) {
      if (!ring_.contains(c)) throw Error(ErrorKind::InvalidParameterMatrix, "parameter outside the coefficient ring");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!q_[i][i].isOne())
      throw Error(ErrorKind::InvalidParameterMatrix, "q" + std::to_string(i + 1) + std::to_string(i + 1) + " must be 1");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(q_[i][j] * q_[j][i]).isOne() || !q_[i][j].isUnit())
        throw Error(ErrorKind::InvalidParameterMatrix, "q_ij q_ji must be 1 for (i, j) = (" + std::to_string(i + 1) +
                                                           ", " + std::to_string(j + 1) + ")");
    }
  }
}

QMatrix QMatrix::fromUpper(CoeffRing ring, std::size_t n, const std::vector<Coeff>& upper) {
  if (upper.size() != n * (n - 1) / 2)
    throw Error(ErrorKind::InvalidParameterMatrix, "expected n(n-1)/2 upper-triangular parameters");
  std::vector<std::vector<Coeff>> q(n, std::vector<Coeff>(n, ring.one()));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++k) {
      if (!upper[k].isUnit()) throw Error(ErrorKind::InvalidParameterMatrix, "parameters must be units");
      q[i][j] = upper[k];
      q[j][i] = upper[k].inverse();
    }
  }
  return QMatrix(std::move(ring), std::move(q));
}

Presentation quantumSpacePresentation(const QMatrix& q, const std::vector<Endomorphism>& sigma,
                                      const CoeffRing& ring) {
  if (!(q.ring() == ring)) throw Error(ErrorKind::RingMismatch, "parameter matrix lives over a different ring");
  const std::size_t n = q.n();
  if (sigma.size() != n) throw Error(ErrorKind::InvalidArgument, "need one endomorphism per generator");
  Presentation p(ring, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!sigma[k].hasInverse())
      throw Error(ErrorKind::MissingInverse, "sigma" + std::to_string(k + 1) + " needs inverse data");
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!(applyEndo(sigma[k], q(i, j)) == q(i, j)))
          throw Error(ErrorKind::InvalidParameterMatrix, "sigma" + std::to_string(k + 1) + " must fix every q_ij");
      }
    }
    p.setSigma(k, sigma[k]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) p.setRelation(i, j, q(i, j));
  p.setFlags(true, true);
  return p;
}

Coeff qFactor(const LaurentMonomial& alpha, const LaurentMonomial& beta, const QMatrix& q) {
  const std::size_t n = q.n();
  if (alpha.size() != n || beta.size() != n) throw Error(ErrorKind::InvalidArgument, "exponent length mismatch");
  Coeff out = q.ring().one();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t e = alpha[j] * beta[i];
      if (e != 0) out = out * intPow(q(i, j), e);
    }
  }
  return out;
}

std::strong_ordering compareLaurent(const LaurentMonomial& a, const LaurentMonomial& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::InvalidArgument, "exponent length mismatch");
  std::int64_t da = 0, db = 0;
  for (auto x : a) da += x;
  for (auto x : b) db += x;
  if (auto c = da <=> db; c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// QuantumTorus

QuantumTorus::QuantumTorus(QMatrix q, std::vector<Endomorphism> sigma, std::size_t r)
    : q_(std::move(q)), sigma_(std::move(sigma)), r_(r) {
  if (sigma_.size() != q_.n()) throw Error(ErrorKind::InvalidArgument, "need one endomorphism per generator");
  if (r_ > q_.n()) throw Error(ErrorKind::InvalidArgument, "invertible block larger than the generator count");
  for (std::size_t i = 0; i < r_; ++i) {
    if (!sigma_[i].hasInverse())
      throw Error(ErrorKind::MissingInverse, "inverting x" + std::to_string(i + 1) + " needs inverse data for its sigma");
  }
}

QuantumTorus QuantumTorus::fromPresentation(const Presentation& p, std::size_t r) {
  if (!p.quasiCommutative()) throw Error(ErrorKind::NotQuasiCommutative, "a quantum space must be quasi-commutative");
  std::vector<Coeff> upper;
  std::vector<Endomorphism> sigma;
  for (std::size_t i = 0; i < p.n(); ++i) {
    sigma.push_back(p.sigma(i));
    for (std::size_t j = i + 1; j < p.n(); ++j) upper.push_back(p.c(i, j));
  }
  return QuantumTorus(QMatrix::fromUpper(p.ring(), p.n(), upper), std::move(sigma), r);
}

Coeff QuantumTorus::sigmaAlpha(const LaurentMonomial& alpha, const Coeff& c) const {
  Coeff out = c;
  for (std::size_t k = n(); k-- > 0;) out = applyEndoPower(sigma_[k], out, alpha.at(k));
  return out;
}

Coeff QuantumTorus::sigmaAlphaInverse(const LaurentMonomial& alpha, const Coeff& c) const {
  Coeff out = c;
  for (std::size_t k = 0; k < n(); ++k) out = applyEndoPower(sigma_[k], out, -alpha.at(k));
  return out;
}

void QuantumTorus::requireMonomial(const LaurentMonomial& m) const {
  if (m.size() != n()) throw Error(ErrorKind::InvalidArgument, "exponent length mismatch");
  for (std::size_t i = r_; i < n(); ++i) {
    if (m[i] < 0)
      throw Error(ErrorKind::InvalidArgument, "negative exponent on x" + std::to_string(i + 1) +
                                                  " outside the invertible block");
  }
}

LaurentElement QuantumTorus::one() const { return monomial(LaurentMonomial(n(), 0), ring().one()); }

LaurentElement QuantumTorus::monomial(const LaurentMonomial& m, const Coeff& c) const {
  return normalize({LaurentTerm{m, c}});
}

LaurentElement QuantumTorus::normalize(std::vector<LaurentTerm> raw) const {
  std::map<LaurentMonomial, Coeff, LaurentDescending> acc;
  for (auto& t : raw) {
    requireMonomial(t.mono);
    ring().require(t.coeff);
    if (t.coeff.isZero()) continue;
    auto [it, inserted] = acc.try_emplace(t.mono, t.coeff);
    if (!inserted) {
      it->second += t.coeff;
      if (it->second.isZero()) acc.erase(it);
    }
  }
  LaurentElement out;
  for (auto& [m, c] : acc) out.terms.push_back(LaurentTerm{m, c});
  return out;
}

LaurentElement QuantumTorus::add(const LaurentElement& f, const LaurentElement& g) const {
  std::vector<LaurentTerm> raw = f.terms;
  raw.insert(raw.end(), g.terms.begin(), g.terms.end());
  return normalize(std::move(raw));
}

LaurentElement QuantumTorus::neg(const LaurentElement& f) const {
  LaurentElement out = f;
  for (auto& t : out.terms) t.coeff = -t.coeff;
  return out;
}

LaurentElement QuantumTorus::sub(const LaurentElement& f, const LaurentElement& g) const { return add(f, neg(g)); }

LaurentElement QuantumTorus::mul(const LaurentElement& f, const LaurentElement& g) const {
  std::vector<LaurentTerm> raw;
  raw.reserve(f.terms.size() * g.terms.size());
  for (const auto& a : f.terms) {
    for (const auto& b : g.terms) {
      raw.push_back(LaurentTerm{plus(a.mono, b.mono), a.coeff * sigmaAlpha(a.mono, b.coeff) * qFactor(a.mono, b.mono, q_)});
    }
  }
  return normalize(std::move(raw));
}

LaurentElement QuantumTorus::inverse(const LaurentElement& s) const {
  if (s.terms.size() != 1) throw Error(ErrorKind::NotInMultiplicativeSet, "only unit monomials are invertible");
  const LaurentTerm& t = s.terms.front();
  if (!t.coeff.isUnit()) throw Error(ErrorKind::NotInMultiplicativeSet, "coefficient is not a unit");
  for (std::size_t i = r_; i < n(); ++i) {
    if (t.mono[i] != 0)
      throw Error(ErrorKind::NotInMultiplicativeSet, "x" + std::to_string(i + 1) + " is not invertible");
  }
  // c sigma^alpha(b) Q(alpha, -alpha) = 1.
  const LaurentMonomial minus = negated(t.mono);
  const Coeff b = sigmaAlphaInverse(t.mono, (t.coeff * qFactor(t.mono, minus, q_)).inverse());
  return monomial(minus, b);
}

LaurentElement QuantumTorus::fromElement(const Element& f) const {
  if (f.algebra()->n() != n() || !(f.algebra()->ring() == ring()))
    throw Error(ErrorKind::PresentationMismatch, "element does not live in this quantum space");
  std::vector<LaurentTerm> raw;
  for (const auto& t : f.terms()) raw.push_back(LaurentTerm{toLaurent(t.mono), t.coeff});
  return normalize(std::move(raw));
}

Element QuantumTorus::toElement(const LaurentElement& f, const AlgebraPtr& algebra) const {
  if (algebra->n() != n() || !(algebra->ring() == ring()))
    throw Error(ErrorKind::PresentationMismatch, "algebra does not match this quantum torus");
  std::vector<Term> terms;
  for (const auto& t : f.terms) {
    std::vector<std::uint32_t> e;
    for (auto x : t.mono) {
      if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent has no polynomial counterpart");
      e.push_back(static_cast<std::uint32_t>(x));
    }
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return algebra->normalize(std::move(terms));
}

// ---------------------------------------------------------------------------
// The multiplicative set of unit monomials

UnitTimesMonomial::UnitTimesMonomial(AlgebraPtr algebra, std::size_t r)
    : algebra_(std::move(algebra)), torus_(QuantumTorus::fromPresentation(algebra_->presentation(), r)) {}

std::string UnitTimesMonomial::describe() const {
  return "unit times monomial in x1..x" + std::to_string(torus_.r());
}

bool UnitTimesMonomial::contains(const Element& s) const {
  if (s.algebra() != algebra_ || s.size() != 1) return false;
  const Term& t = s.terms().front();
  if (!t.coeff.isUnit()) return false;
  for (std::size_t i = torus_.r(); i < algebra_->n(); ++i)
    if (t.mono[i] != 0) return false;
  return true;
}

OreSolution UnitTimesMonomial::solveLeft(const Element& f, const Element& s) const {
  require(s);
  algebra_->requireOwn(f);
  const Coeff& rho = s.terms().front().coeff;
  const LaurentMonomial beta = toLaurent(s.terms().front().mono);
  const QMatrix& q = torus_.q();
  // u = x^beta; x^beta c x^gamma = d x^gamma rho x^beta fixes d.
  std::vector<Term> g;
  for (const auto& t : f.terms()) {
    const LaurentMonomial gamma = toLaurent(t.mono);
    const Coeff lhs = torus_.sigmaAlpha(beta, t.coeff) * qFactor(beta, gamma, q);
    const Coeff rhs = torus_.sigmaAlpha(gamma, rho) * qFactor(gamma, beta, q);
    g.push_back(Term{t.mono, lhs * rhs.inverse()});
  }
  OreSolution sol{algebra_->monomial(s.terms().front().mono), algebra_->normalize(std::move(g))};
  if (!(algebra_->mul(sol.u, f) == algebra_->mul(sol.g, s)))
    throw std::logic_error("left Ore solution failed verification");
  return sol;
}

OreSolution UnitTimesMonomial::solveRight(const Element& f, const Element& s) const {
  require(s);
  algebra_->requireOwn(f);
  const Coeff& rho = s.terms().front().coeff;
  const LaurentMonomial beta = toLaurent(s.terms().front().mono);
  const QMatrix& q = torus_.q();
  // u = x^beta; c x^gamma x^beta = rho x^beta d x^gamma fixes d.
  std::vector<Term> g;
  for (const auto& t : f.terms()) {
    const LaurentMonomial gamma = toLaurent(t.mono);
    const Coeff target = t.coeff * qFactor(gamma, beta, q) * (rho * qFactor(beta, gamma, q)).inverse();
    g.push_back(Term{t.mono, torus_.sigmaAlphaInverse(beta, target)});
  }
  OreSolution sol{algebra_->monomial(s.terms().front().mono), algebra_->normalize(std::move(g))};
  if (!(algebra_->mul(f, sol.u) == algebra_->mul(s, sol.g)))
    throw std::logic_error("right Ore solution failed verification");
  return sol;
}

// ---------------------------------------------------------------------------
// Fractions and Laurent elements

LaurentElement fractionToLaurent(const Fraction& x, const QuantumTorus& torus) {
  const LaurentElement inv = torus.inverse(torus.fromElement(x.denom));
  const LaurentElement num = torus.fromElement(x.numer);
  return x.side == Side::Left ? torus.mul(inv, num) : torus.mul(num, inv);
}

Fraction laurentToFraction(const LaurentElement& f, const QuantumTorus& torus, const AlgebraPtr& algebra, Side side) {
  LaurentMonomial beta(torus.n(), 0);
  for (const auto& t : f.terms) {
    torus.requireMonomial(t.mono);
    for (std::size_t i = 0; i < torus.r(); ++i) beta[i] = std::max(beta[i], -t.mono[i]);
  }
  const LaurentElement xb = torus.monomial(beta, torus.ring().one());
  const LaurentElement num = side == Side::Left ? torus.mul(xb, f) : torus.mul(f, xb);
  std::vector<std::uint32_t> e(beta.begin(), beta.end());
  return Fraction{side, algebra->monomial(Monomial(std::move(e))), torus.toElement(num, algebra)};
}

std::string formatLaurent(const LaurentElement& f, const CoeffRing& ring) {
  std::vector<std::pair<std::string, std::string>> pieces;
  for (const auto& t : f.terms) {
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (t.mono[i] != 1) mono += "^" + std::to_string(t.mono[i]);
    }
    pieces.emplace_back(detail::coeffFactor(t.coeff, ring), mono);
  }
  return detail::joinTerms(pieces);
}

namespace {

struct LaurentOps {
  using Value = LaurentElement;
  const QuantumTorus& torus;

  Value integer(const mpz_class& z) const { return torus.monomial(LaurentMonomial(torus.n(), 0), torus.ring().constant(Rational(z))); }
  Value symbol(const std::string& name, std::size_t pos) const {
    const long g = detail::generatorIndex(name, torus.n());
    if (g >= 0) {
      LaurentMonomial m(torus.n(), 0);
      m[static_cast<std::size_t>(g)] = 1;
      return torus.monomial(m, torus.ring().one());
    }
    const auto& syms = torus.ring().symbols();
    auto it = std::find(syms.begin(), syms.end(), name);
    if (it == syms.end()) detail::parseError(pos, "unknown symbol '" + name + "'");
    return torus.monomial(LaurentMonomial(torus.n(), 0),
                          torus.ring().generator(static_cast<std::size_t>(it - syms.begin())));
  }
  Value add(const Value& a, const Value& b) const { return torus.add(a, b); }
  Value sub(const Value& a, const Value& b) const { return torus.sub(a, b); }
  Value mul(const Value& a, const Value& b) const { return torus.mul(a, b); }
  Value neg(const Value& a) const { return torus.neg(a); }
  Value div(const Value& a, const Value& b, std::size_t pos) const {
    if (b.terms.size() != 1 || !b.terms.front().coeff.isUnit() ||
        std::any_of(b.terms.front().mono.begin(), b.terms.front().mono.end(), [](auto x) { return x != 0; }))
      detail::parseError(pos, "division only by unit constants");
    return torus.mul(a, torus.inverse(b));
  }
  Value pow(const Value& a, long e, std::size_t pos) const {
    Value base = a;
    if (e < 0) {
      try {
        base = torus.inverse(a);
      } catch (const Error&) {
        detail::parseError(pos, "negative exponent outside the invertible block");
      }
      e = -e;
    }
    Value out = torus.one();
    for (long i = 0; i < e; ++i) out = torus.mul(out, base);
    return out;
  }
};

}  // namespace

LaurentElement parseLaurent(std::string_view text, const QuantumTorus& torus) {
  LaurentOps ops{torus};
  return detail::ExprParser<LaurentOps>(text, ops).parse();
}

// ---------------------------------------------------------------------------
// Dual-route check

GkReport gkStructureCheck(std::size_t r, const QMatrix& q, const std::vector<Endomorphism>& sigma,
                          const CoeffRing& ring, std::size_t samples, std::uint64_t seed, bool corruptRouteB) {
  GkReport report;
  const std::size_t n = q.n();
  if (r > n) throw Error(ErrorKind::InvalidArgument, "invertible block larger than the generator count");
  const CoeffRing field = fractionFieldOf(ring);

  // Route (a): localize the quantum space over R.
  const Presentation pa = localizePresentation(quantumSpacePresentation(q, sigma, ring));
  const AlgebraPtr algebraA = Algebra::create(pa);
  const UnitTimesMonomial setA(algebraA, r);

  // Route (b): the quantum space over Q(R) built directly.
  auto lift = [&](const Coeff& c) { return liftToFractionField(c, ring); };
  std::vector<std::vector<Coeff>> qb(n, std::vector<Coeff>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) qb[i][j] = lift(q(i, j));
  if (corruptRouteB && n >= 2) std::swap(qb[0][1], qb[1][0]);
  std::vector<Endomorphism> sigmaB;
  for (const auto& s : sigma) {
    if (s.isIdentity()) {
      sigmaB.push_back(s);
      continue;
    }
    Endomorphism e;
    e.images.emplace();
    for (const auto& c : *s.images) e.images->push_back(lift(c));
    if (s.inverseImages) {
      e.inverseImages.emplace();
      for (const auto& c : *s.inverseImages) e.inverseImages->push_back(lift(c));
    }
    sigmaB.push_back(std::move(e));
  }
  const QMatrix qmB(field, qb);
  const Presentation pb = quantumSpacePresentation(qmB, sigmaB, field);
  const QuantumTorus torusB(qmB, sigmaB, r);

  report.structuralMatch = pa == pb;
  if (!report.structuralMatch) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!(pa.c(i, j) == pb.c(i, j)))
          report.notes.push_back("c[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "] differs: " +
                                 formatCoeff(pa.c(i, j), field) + " vs " + formatCoeff(pb.c(i, j), field));
    for (std::size_t i = 0; i < n; ++i)
      if (!(pa.sigma(i) == pb.sigma(i))) report.notes.push_back("sigma" + std::to_string(i + 1) + " differs");
  }

  Rng rng(seed);
  const SampleShape shape{3, 3, 5, 1};
  auto randomFraction = [&](std::size_t k) {
    // Alternate between numerators over R (lifted) and over Q(R).
    Element numer = algebraA->zero();
    if (k % 2 == 0 && !ring.isField()) {
      std::vector<Term> terms;
      for (unsigned t = 0; t < shape.maxTerms; ++t)
        terms.push_back(Term{randomMonomial(n, shape.maxDegree, rng), lift(randomCoeff(ring, rng, shape))});
      numer = algebraA->normalize(std::move(terms));
    } else {
      numer = randomElement(algebraA, rng, shape);
    }
    std::vector<std::uint32_t> beta(n, 0);
    for (std::size_t i = 0; i < r; ++i) beta[i] = std::uniform_int_distribution<std::uint32_t>(0, 2)(rng);
    const Coeff rho = randomCoeff(field, rng, shape, true);
    return makeFraction(Side::Left, algebraA->monomial(Monomial(std::move(beta)), rho), numer, setA);
  };

  for (std::size_t k = 0; k < samples; ++k) {
    const Fraction x = randomFraction(2 * k), y = randomFraction(2 * k + 1);
    const LaurentElement viaA = fractionToLaurent(fracMul(x, y, setA), setA.torus());
    const LaurentElement viaB = torusB.mul(fractionToLaurent(x, torusB), fractionToLaurent(y, torusB));
    ++report.samples;
    if (viaA == viaB) {
      ++report.agreements;
    } else if (report.notes.size() < 5) {
      report.notes.push_back("product " + std::to_string(k) + ": " + formatLaurent(viaA, field) + " vs " +
                             formatLaurent(viaB, field));
    }
  }
  return report;
}

}  // namespace skewpbw
