#include "skewpbw/algebra.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace skewpbw {

namespace {

using TermMap = std::map<Monomial, Coeff, MonomialDescending>;

void accumulate(TermMap& acc, const Monomial& m, const Coeff& c) {
  if (c.isZero()) return;
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.isZero()) acc.erase(it);
  }
}

std::vector<Term> finalize(TermMap&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back(Term{m, std::move(c)});
  return out;
}

std::uint64_t saturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = saturatingMul(r, n - k + i) / i;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Element

int Element::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

Coeff Element::coeffOf(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return algebra_->ring().zero();
}

Element Element::operator-() const {
  Element r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Element operator+(const Element& f, const Element& g) { return f.algebra_->add(f, g); }
Element operator-(const Element& f, const Element& g) { return f.algebra_->sub(f, g); }
Element operator*(const Element& f, const Element& g) { return f.algebra_->mul(f, g); }

bool operator==(const Element& f, const Element& g) {
  f.algebra_->requireOwn(g);
  return f.terms_ == g.terms_;
}

Element Element::leftScaled(const Coeff& r) const {
  algebra_->ring().require(r);
  if (r.isZero()) return algebra_->zero();
  Element out = *this;
  for (auto& t : out.terms_) t.coeff = r * t.coeff;
  // R is a domain, so no coefficient vanishes.
  return out;
}

// ---------------------------------------------------------------------------
// Construction

AlgebraPtr Algebra::createUnchecked(Presentation p) {
  const auto& ring = p.ring();
  auto requireMapData = [&](const std::optional<std::vector<Coeff>>& imgs) {
    if (!imgs) return;
    if (imgs->size() != ring.generatorCount())
      throw Error(ErrorKind::InvalidPresentation, "map image count does not match ring generators");
    for (const auto& c : *imgs) ring.require(c);
  };
  for (std::size_t i = 0; i < p.n(); ++i) {
    requireMapData(p.sigma(i).images);
    requireMapData(p.sigma(i).inverseImages);
    requireMapData(p.delta(i).images);
  }
  return AlgebraPtr(new Algebra(std::move(p)));
}

AlgebraPtr Algebra::create(Presentation p) {
  CheckReport report = checkPresentation(p);
  if (!report.ok()) {
    std::ostringstream msg;
    msg << report.violations.size() << " violation(s)";
    for (const auto& v : report.violations) msg << "; " << to_string(v.kind) << " at " << v.location << ": " << v.detail;
    throw Error(ErrorKind::InvalidPresentation, msg.str());
  }
  return createUnchecked(std::move(p));
}

void Algebra::requireOwn(const Element& f) const {
  if (f.algebra_.get() != this)
    throw Error(ErrorKind::PresentationMismatch, "element belongs to a different algebra");
}

Element Algebra::zero() const { return wrap({}); }

Element Algebra::one() const { return constant(ring().one()); }

Element Algebra::constant(const Coeff& c) const { return monomial(Monomial(n()), c); }

Element Algebra::generator(std::size_t i) const { return monomial(Monomial::unit(n(), i)); }

Element Algebra::monomial(const Monomial& m, const Coeff& c) const {
  if (m.size() != n()) throw std::invalid_argument("monomial length does not match generator count");
  ring().require(c);
  if (c.isZero()) return zero();
  return wrap({Term{m, c}});
}

Element Algebra::normalize(std::vector<Term> rawTerms) const {
  TermMap acc;
  for (auto& t : rawTerms) {
    if (t.mono.size() != n()) throw std::invalid_argument("monomial length does not match generator count");
    ring().require(t.coeff);
    accumulate(acc, t.mono, t.coeff);
  }
  return wrap(finalize(std::move(acc)));
}

// ---------------------------------------------------------------------------
// Arithmetic

Element Algebra::add(const Element& f, const Element& g) const {
  requireOwn(f);
  requireOwn(g);
  TermMap acc;
  for (const auto& t : f.terms()) accumulate(acc, t.mono, t.coeff);
  for (const auto& t : g.terms()) accumulate(acc, t.mono, t.coeff);
  return wrap(finalize(std::move(acc)));
}

Element Algebra::sub(const Element& f, const Element& g) const { return add(f, -g); }

void Algebra::Budget::step() {
  if (++steps > bound)
    throw Error(ErrorKind::StepBoundExceeded, "rewriting exceeded " + std::to_string(bound) + " steps");
}

std::size_t Algebra::VecHash::operator()(const std::vector<std::uint32_t>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : v) h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

// Each fresh rewrite computes one cache entry, keyed by a monomial pair or a
// (monomial, generator) pair of total degree <= degree.
std::uint64_t Algebra::stepBound(int degree) const {
  const std::uint64_t monos = binomial(static_cast<std::uint64_t>(std::max(degree, 0)) + n(), n());
  return saturatingMul(monos, monos) + saturatingMul(monos, n()) + 1;
}

std::vector<Coeff> Algebra::skewPower(std::size_t k, std::uint32_t m, const Coeff& c) const {
  // x_k^m c = sum_i v[i] x_k^i, built one factor at a time.
  const Endomorphism& sigma = p_.sigma(k);
  const Derivation& delta = p_.delta(k);
  std::vector<Coeff> v{c};
  for (std::uint32_t step = 0; step < m; ++step) {
    std::vector<Coeff> w(v.size() + 1, ring().zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].isZero()) continue;
      w[i + 1] += applyEndo(sigma, v[i]);
      if (!delta.isZero()) w[i] += applyDeriv(delta, sigma, v[i]);
    }
    v = std::move(w);
  }
  return v;
}

Algebra::TermList Algebra::monoTimesCoeff(const Monomial& alpha, const Coeff& r) const {
  // Push r leftwards through x_n^an, then x_{n-1}^a(n-1), ... ; every partial
  // result is already a standard monomial because only later positions are set.
  std::vector<Term> current{Term{Monomial(n()), r}};
  for (std::size_t k = n(); k-- > 0;) {
    const std::uint32_t m = alpha[k];
    if (m == 0) continue;
    TermMap next;
    for (const auto& t : current) {
      const auto powers = skewPower(k, m, t.coeff);
      for (std::size_t i = 0; i < powers.size(); ++i)
        accumulate(next, t.mono.with(k, static_cast<std::uint32_t>(i)), powers[i]);
    }
    current = finalize(std::move(next));
  }
  if (current.size() == 1 && current.front().coeff.isZero()) current.clear();
  return current;
}

const Algebra::TermList& Algebra::monoTimesGen(const Monomial& alpha, std::size_t j, Budget& budget) const {
  std::vector<std::uint32_t> key = alpha.exponents();
  key.push_back(static_cast<std::uint32_t>(j));
  {
    std::lock_guard lock(cacheMutex_);
    if (auto it = genCache_.find(key); it != genCache_.end()) return *it->second;
  }

  std::size_t last = n();
  for (std::size_t i = n(); i-- > 0;) {
    if (alpha[i] > 0) {
      last = i;
      break;
    }
  }

  TermList result;
  if (last == n() || last <= j) {
    result.push_back(Term{alpha.with(j, alpha[j] + 1), ring().one()});
  } else {
    // x^alpha x_j = x^gamma (x_k x_j) with x_k x_j = c_jk x_j x_k + tail_jk.
    budget.step();
    const std::size_t k = last;
    const Monomial gamma = alpha.with(k, alpha[k] - 1);
    TermMap acc;
    for (const auto& t : monoTimesCoeff(gamma, p_.c(j, k))) {
      for (const auto& u : monoTimesGen(t.mono, j, budget)) {
        const Coeff tu = t.coeff * u.coeff;
        for (const auto& v : monoTimesGen(u.mono, k, budget)) accumulate(acc, v.mono, tu * v.coeff);
      }
    }
    const Tail& tail = p_.tail(j, k);
    for (std::size_t m = 0; m < n(); ++m) {
      if (tail.linear[m].isZero()) continue;
      for (const auto& t : monoTimesCoeff(gamma, tail.linear[m])) {
        for (const auto& u : monoTimesGen(t.mono, m, budget)) accumulate(acc, u.mono, t.coeff * u.coeff);
      }
    }
    if (!tail.constant.isZero()) {
      for (const auto& t : monoTimesCoeff(gamma, tail.constant)) accumulate(acc, t.mono, t.coeff);
    }
    result = finalize(std::move(acc));
  }

  std::lock_guard lock(cacheMutex_);
  auto [it, inserted] = genCache_.try_emplace(std::move(key), std::make_shared<const TermList>(std::move(result)));
  return *it->second;
}

const Algebra::TermList& Algebra::monoTimesMono(const Monomial& alpha, const Monomial& beta, Budget& budget) const {
  std::vector<std::uint32_t> key = alpha.exponents();
  key.insert(key.end(), beta.exponents().begin(), beta.exponents().end());
  {
    std::lock_guard lock(cacheMutex_);
    if (auto it = monoCache_.find(key); it != monoCache_.end()) return *it->second;
  }

  TermList result;
  std::size_t j = 0;
  while (j < n() && beta[j] == 0) ++j;
  if (j == n()) {
    result.push_back(Term{alpha, ring().one()});
  } else {
    budget.step();
    const Monomial rest = beta.with(j, beta[j] - 1);
    TermMap acc;
    for (const auto& u : monoTimesGen(alpha, j, budget)) {
      for (const auto& v : monoTimesMono(u.mono, rest, budget)) accumulate(acc, v.mono, u.coeff * v.coeff);
    }
    result = finalize(std::move(acc));
  }

  std::lock_guard lock(cacheMutex_);
  auto [it, inserted] = monoCache_.try_emplace(std::move(key), std::make_shared<const TermList>(std::move(result)));
  return *it->second;
}

std::pair<Element, MulStats> Algebra::mulWithStats(const Element& f, const Element& g) const {
  requireOwn(f);
  requireOwn(g);
  Budget budget;
  budget.bound = stepBound(f.degree() + g.degree());
  TermMap acc;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      for (const auto& t : monoTimesCoeff(a.mono, b.coeff)) {
        const Coeff at = a.coeff * t.coeff;
        for (const auto& u : monoTimesMono(t.mono, b.mono, budget)) accumulate(acc, u.mono, at * u.coeff);
      }
    }
  }
  return {wrap(finalize(std::move(acc))), MulStats{budget.steps, budget.bound}};
}

Element Algebra::mul(const Element& f, const Element& g) const { return mulWithStats(f, g).first; }

// ---------------------------------------------------------------------------
// Leading splits

Coeff Algebra::sigmaAlpha(const Monomial& alpha, const Coeff& r) const {
  if (alpha.size() != n()) throw std::invalid_argument("monomial length does not match generator count");
  Coeff out = r;
  for (std::size_t k = n(); k-- > 0;) out = applyEndoPower(p_.sigma(k), out, alpha[k]);
  return out;
}

Coeff Algebra::sigmaAlphaInverse(const Monomial& alpha, const Coeff& r) const {
  if (alpha.size() != n()) throw std::invalid_argument("monomial length does not match generator count");
  Coeff out = r;
  for (std::size_t k = 0; k < n(); ++k) out = applyEndoPower(p_.sigma(k), out, -static_cast<long>(alpha[k]));
  return out;
}

LeadingSplit Algebra::monomialTimesCoeff(const Monomial& alpha, const Coeff& r) const {
  ring().require(r);
  if (r.isZero()) throw Error(ErrorKind::InvalidArgument, "x^alpha r requires r != 0");
  Element prod = mul(monomial(alpha), constant(r));
  Coeff lead = prod.coeffOf(alpha);
  return {lead, prod - monomial(alpha, lead)};
}

LeadingSplit Algebra::monomialTimesMonomial(const Monomial& alpha, const Monomial& beta) const {
  Element prod = mul(monomial(alpha), monomial(beta));
  const Monomial sum = alpha + beta;
  Coeff lead = prod.coeffOf(sum);
  return {lead, prod - monomial(sum, lead)};
}

LeadingData Algebra::leadingData(const Element& f) const {
  requireOwn(f);
  if (f.isZero()) throw Error(ErrorKind::UndefinedLeader, "the zero element has no leading term");
  const Term& t = f.terms().front();
  return {t.mono, t.coeff, t.mono.degree()};
}

}  // namespace skewpbw
