#include "skewpbw/text.hpp"

#include <algorithm>

#include "expr_parser.hpp"

namespace skewpbw {

namespace {

std::string power(const std::string& symbol, long e) {
  if (e == 1) return symbol;
  return symbol + "^" + std::to_string(e);
}

// (coefficient, monomial) with a rational coefficient.
std::pair<std::string, std::string> rationalPiece(const Rational& c, std::string mono) {
  return {c.get_str(), std::move(mono)};
}

std::string formatUPoly(const UPoly& p, const std::string& var) {
  if (p.isZero()) return "0";
  std::vector<std::pair<std::string, std::string>> pieces;
  for (int d = p.degree(); d >= 0; --d) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    pieces.push_back(rationalPiece(c, d == 0 ? "" : power(var, d)));
  }
  return detail::joinTerms(pieces);
}

std::size_t upolyTermCount(const UPoly& p) {
  return static_cast<std::size_t>(std::count_if(p.coeffs().begin(), p.coeffs().end(), [](const Rational& c) { return c != 0; }));
}

std::string formatMPoly(const MPoly& p, const std::vector<std::string>& vars) {
  if (p.isZero()) return "0";
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    std::uint32_t da = 0, db = 0;
    for (auto x : a.first) da += x;
    for (auto x : b.first) db += x;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::vector<std::pair<std::string, std::string>> pieces;
  for (const auto& [e, c] : terms) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += power(vars[i], e[i]);
    }
    pieces.push_back(rationalPiece(c, mono));
  }
  return detail::joinTerms(pieces);
}

bool isCompound(const Coeff& c) {
  if (const auto* p = std::get_if<MPoly>(&c.repr())) return p->terms().size() > 1;
  if (const auto* f = std::get_if<RatFunc>(&c.repr())) return f->isPolynomial() && upolyTermCount(f->num()) > 1;
  return false;
}

struct CoeffOps {
  using Value = Coeff;
  const CoeffRing& ring;

  Value integer(const mpz_class& z) const { return ring.constant(Rational(z)); }
  Value symbol(const std::string& name, std::size_t pos) const {
    const auto& syms = ring.symbols();
    auto it = std::find(syms.begin(), syms.end(), name);
    if (it == syms.end()) detail::parseError(pos, "unknown symbol '" + name + "'");
    return ring.generator(static_cast<std::size_t>(it - syms.begin()));
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value div(const Value& a, const Value& b, std::size_t pos) const {
    if (b.isZero()) detail::parseError(pos, "division by zero");
    if (!b.isUnit()) detail::parseError(pos, "division by a non-unit");
    return a * b.inverse();
  }
  Value pow(const Value& a, long e, std::size_t pos) const {
    if (e >= 0) return a.pow(static_cast<unsigned>(e));
    if (!a.isUnit()) detail::parseError(pos, "negative power of a non-unit");
    return a.inverse().pow(static_cast<unsigned>(-e));
  }
};

struct ElementOps {
  using Value = Element;
  const AlgebraPtr& a;

  Value integer(const mpz_class& z) const { return a->constant(a->ring().constant(Rational(z))); }
  Value symbol(const std::string& name, std::size_t pos) const {
    const long g = detail::generatorIndex(name, a->n());
    if (g >= 0) return a->generator(static_cast<std::size_t>(g));
    return a->constant(CoeffOps{a->ring()}.symbol(name, pos));
  }
  Value add(const Value& x, const Value& y) const { return a->add(x, y); }
  Value sub(const Value& x, const Value& y) const { return a->sub(x, y); }
  Value mul(const Value& x, const Value& y) const { return a->mul(x, y); }
  Value neg(const Value& x) const { return -x; }
  Value div(const Value& x, const Value& y, std::size_t pos) const {
    if (!y.isConstant() || y.isZero()) detail::parseError(pos, "division only by nonzero constants");
    const Coeff c = y.terms().front().coeff;
    return a->mul(x, a->constant(CoeffOps{a->ring()}.div(a->ring().one(), c, pos)));
  }
  Value pow(const Value& x, long e, std::size_t pos) const {
    if (e < 0) detail::parseError(pos, "negative exponent");
    Value r = a->one();
    for (long i = 0; i < e; ++i) r = a->mul(r, x);
    return r;
  }
};

}  // namespace

namespace detail {

std::string joinTerms(const std::vector<std::pair<std::string, std::string>>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& [c, mono] = pieces[i];
    std::string t;
    if (mono.empty()) t = c;
    else if (c == "1") t = mono;
    else if (c == "-1") t = "-" + mono;
    else t = c + "*" + mono;
    if (i == 0) out = t;
    else if (t.front() == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

std::string coeffFactor(const Coeff& c, const CoeffRing& ring) {
  std::string s = formatCoeff(c, ring);
  return isCompound(c) ? "(" + s + ")" : s;
}

}  // namespace detail

std::string formatCoeff(const Coeff& c, const CoeffRing& ring) {
  ring.require(c);
  if (const auto* r = std::get_if<Rational>(&c.repr())) return r->get_str();
  if (const auto* p = std::get_if<MPoly>(&c.repr())) return formatMPoly(*p, ring.symbols());
  const auto& f = std::get<RatFunc>(c.repr());
  const std::string& q = ring.symbols().front();
  std::string num = formatUPoly(f.num(), q);
  if (f.isPolynomial()) return num;
  if (upolyTermCount(f.num()) > 1) num = "(" + num + ")";
  std::string den = formatUPoly(f.den(), q);
  if (upolyTermCount(f.den()) > 1) den = "(" + den + ")";
  return num + "/" + den;
}

Coeff parseCoeff(std::string_view text, const CoeffRing& ring) {
  CoeffOps ops{ring};
  return detail::ExprParser<CoeffOps>(text, ops).parse();
}

std::string formatMonomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += power("x" + std::to_string(i + 1), m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string formatElement(const Element& f) {
  const CoeffRing& ring = f.algebra()->ring();
  std::vector<std::pair<std::string, std::string>> pieces;
  for (const auto& t : f.terms()) {
    pieces.emplace_back(detail::coeffFactor(t.coeff, ring), t.mono.isOne() ? "" : formatMonomial(t.mono));
  }
  return detail::joinTerms(pieces);
}

Element parseElement(std::string_view text, const AlgebraPtr& algebra) {
  ElementOps ops{algebra};
  return detail::ExprParser<ElementOps>(text, ops).parse();
}

}  // namespace skewpbw
