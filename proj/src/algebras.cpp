#include "skewpbw/algebras.hpp"

#include <map>

namespace skewpbw {

namespace {

CoeffRing qField() { return CoeffRing::rationalFunctionField("q"); }

Coeff qPower(unsigned e) { return Coeff(RatFunc(UPoly::monomial(1, e))); }

Presentation zeroConstantPresentation() {
  Presentation p = quantumPlanePresentation();
  p.setRelation(0, 1, p.ring().zero());
  p.setFlags(true, false);
  return p;
}

Presentation sl2BrokenPresentation() {
  // he = eh + 3e breaks the Jacobi identity on (h, f, e).
  return envelopingLiePresentation(3, {{1, 0, {0, 0, -1}}, {2, 0, {3, 0, 0}}, {2, 1, {0, -2, 0}}});
}

}  // namespace

Presentation weylPresentation(std::size_t n) {
  std::vector<std::string> vars;
  if (n == 1) {
    vars.push_back("t");
  } else {
    for (std::size_t i = 0; i < n; ++i) vars.push_back("t" + std::to_string(i + 1));
  }
  CoeffRing ring = CoeffRing::polynomialRing(vars);
  Presentation p(ring, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Coeff> d(n, ring.zero());
    d[i] = ring.one();
    p.setDelta(i, Derivation::fromImages(std::move(d)));
  }
  p.setFlags(false, true);
  return p;
}

Presentation shiftPresentation() {
  CoeffRing ring = CoeffRing::polynomialRing({"t"});
  const Coeff t = ring.generator(0);
  Presentation p(ring, 1);
  p.setSigma(0, Endomorphism::fromImages({t + ring.one()}, std::vector<Coeff>{t - ring.one()}));
  p.setFlags(true, true);
  return p;
}

Presentation quantumPlanePresentation() {
  Presentation p(qField(), 2);
  p.setRelation(0, 1, qPower(1));
  p.setFlags(true, true);
  return p;
}

Presentation quantumSpace3Presentation() {
  const QMatrix q = QMatrix::fromUpper(qField(), 3, {qPower(1), qPower(2), qPower(3)});
  return quantumSpacePresentation(q, std::vector<Endomorphism>(3), qField());
}

Presentation envelopingLiePresentation(std::size_t dim, const std::vector<Bracket>& brackets) {
  CoeffRing ring = CoeffRing::rationalField();
  Presentation p(ring, dim);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> table;
  for (const auto& b : brackets) {
    if (b.i >= dim || b.j >= dim || b.i == b.j || b.coeffs.size() != dim)
      throw Error(ErrorKind::InvalidArgument, "malformed structure constants");
    std::vector<Rational> c = b.coeffs;
    std::size_t hi = b.j, lo = b.i;
    if (hi < lo) {
      std::swap(hi, lo);
      for (auto& x : c) x = -x;
    }
    auto [it, inserted] = table.try_emplace({lo, hi}, c);
    if (!inserted && it->second != c)
      throw Error(ErrorKind::InvalidArgument, "structure constants are not antisymmetric");
  }
  for (const auto& [pair, c] : table) {
    Tail tail = p.zeroTail();
    for (std::size_t k = 0; k < dim; ++k) tail.linear[k] = ring.constant(c[k]);
    p.setRelation(pair.first, pair.second, ring.one(), tail);
  }
  p.setFlags(false, true);
  return p;
}

Presentation sl2Presentation() {
  return envelopingLiePresentation(3, {{1, 0, {0, 0, -1}}, {2, 0, {2, 0, 0}}, {2, 1, {0, -2, 0}}});
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"weyl1", "Weyl algebra over Q[t]: x1 t = t x1 + 1", true},
      {"weyl2", "Weyl algebra over Q[t1,t2]: x_i t_i = t_i x_i + 1", true},
      {"shift", "shift algebra over Q[t]: x1 t = (t + 1) x1", true},
      {"quantum-plane", "quantum plane over Q(q): x2 x1 = q x1 x2", true},
      {"quantum-space3", "quantum space over Q(q) with q12 = q, q13 = q^2, q23 = q^3", true},
      {"sl2", "enveloping algebra of sl2 in the order e, f, h", true},
      {"sl2-broken", "sl2 with he = eh + 3e (fails Jacobi)", false},
      {"zero-constant", "quantum plane with c12 = 0", false},
  };
  return entries;
}

Presentation buildCatalog(const std::string& name) {
  if (name == "weyl1") return weylPresentation(1);
  if (name == "weyl2") return weylPresentation(2);
  if (name == "shift") return shiftPresentation();
  if (name == "quantum-plane") return quantumPlanePresentation();
  if (name == "quantum-space3") return quantumSpace3Presentation();
  if (name == "sl2") return sl2Presentation();
  if (name == "sl2-broken") return sl2BrokenPresentation();
  if (name == "zero-constant") return zeroConstantPresentation();
  throw Error(ErrorKind::InvalidArgument, "unknown catalog entry '" + name + "'");
}

UPoly weylOracleApply(const Element& f, const UPoly& p) {
  if (!(f.algebra()->presentation() == weylPresentation(1)))
    throw Error(ErrorKind::InvalidArgument, "the Weyl oracle needs an element of a one-variable Weyl algebra");
  UPoly out;
  for (const auto& term : f.terms()) {
    UPoly d = p;
    for (std::uint32_t k = 0; k < term.mono[0]; ++k) d = d.derivative();
    std::vector<Rational> c;
    for (const auto& [e, v] : std::get<MPoly>(term.coeff.repr()).terms()) {
      if (c.size() <= e[0]) c.resize(e[0] + 1);
      c[e[0]] = v;
    }
    out = out + UPoly(std::move(c)) * d;
  }
  return out;
}

Coeff torusOracleFactor(const Monomial& alpha, const Monomial& beta, const QMatrix& q) {
  std::vector<std::size_t> word;
  for (const auto* m : {&alpha, &beta})
    for (std::size_t i = 0; i < m->size(); ++i)
      for (std::uint32_t k = 0; k < (*m)[i]; ++k) word.push_back(i);
  Coeff factor = q.ring().one();
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < word.size(); ++p) {
      if (word[p] > word[p + 1]) {
        // x_j x_i = q_ij x_i x_j
        factor = factor * q(word[p + 1], word[p]);
        std::swap(word[p], word[p + 1]);
        swapped = true;
      }
    }
  }
  return factor;
}

}  // namespace skewpbw
