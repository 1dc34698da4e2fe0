#include <functional>
#include <sstream>

#include "skewpbw/algebra.hpp"
#include "skewpbw/text.hpp"

namespace skewpbw {

namespace {

std::string gen(std::size_t i) { return "x" + std::to_string(i + 1); }

// c_ij x_i x_j + tail_ij, the rewrite of x_j x_i (i < j).
Element relationRhs(const Algebra& a, std::size_t i, std::size_t j) {
  const Presentation& p = a.presentation();
  std::vector<Term> terms;
  terms.push_back(Term{Monomial::unit(p.n(), i) + Monomial::unit(p.n(), j), p.c(i, j)});
  const Tail& tail = p.tail(i, j);
  for (std::size_t m = 0; m < p.n(); ++m) terms.push_back(Term{Monomial::unit(p.n(), m), tail.linear[m]});
  terms.push_back(Term{Monomial(p.n()), tail.constant});
  return a.normalize(std::move(terms));
}

class Checker {
 public:
  Checker(const Presentation& p, CheckReport& report) : p_(p), report_(report) {}

  void add(Violation::Kind kind, std::string location, std::string detail) {
    report_.violations.push_back(Violation{kind, std::move(location), std::move(detail)});
  }

  // Runs one overlap comparison; exceptions count as violations.
  void compare(const std::string& location, const std::function<Element()>& lhs,
               const std::function<Element()>& rhs) {
    try {
      Element l = lhs(), r = rhs();
      if (!(l == r)) add(Violation::Kind::Overlap, location, formatElement(l) + " != " + formatElement(r));
    } catch (const std::exception& e) {
      add(Violation::Kind::Overlap, location, e.what());
    }
  }

  const Presentation& p_;
  CheckReport& report_;
};

void enumerateMonomials(std::size_t n, unsigned maxDegree, std::vector<Monomial>& out) {
  std::vector<std::uint32_t> e(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
    if (pos == n) {
      Monomial m(e);
      if (!m.isOne()) out.push_back(m);
      return;
    }
    for (unsigned d = 0; d <= left; ++d) {
      e[pos] = d;
      rec(pos + 1, left - d);
    }
    e[pos] = 0;
  };
  rec(0, maxDegree);
}

}  // namespace

CheckReport checkPresentation(const Presentation& p, unsigned degreeBound) {
  CheckReport report;
  Checker chk(p, report);
  const std::size_t n = p.n();
  const CoeffRing& ring = p.ring();

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p.c(i, j).isZero())
        chk.add(Violation::Kind::Axiom, "c[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                "relation constant must be nonzero");
    }
  }

  bool mapsOk = true;
  for (std::size_t i = 0; i < n; ++i) {
    try {
      validateEndomorphism(ring, p.sigma(i));
    } catch (const Error& e) {
      mapsOk = false;
      chk.add(Violation::Kind::Map, "sigma" + std::to_string(i + 1), e.what());
    }
    try {
      validateDerivation(ring, p.delta(i), p.sigma(i));
    } catch (const Error& e) {
      mapsOk = false;
      chk.add(Violation::Kind::Map, "delta" + std::to_string(i + 1), e.what());
    }
  }

  if (p.quasiCommutative()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.delta(i).isZero())
        chk.add(Violation::Kind::Flag, "delta" + std::to_string(i + 1), "quasi-commutative requires zero derivations");
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!p.tail(i, j).isZero())
          chk.add(Violation::Kind::Flag, "tail[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                  "quasi-commutative requires zero tails");
      }
    }
  }
  if (p.bijective()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!p.sigma(i).hasInverse())
        chk.add(Violation::Kind::Flag, "sigma" + std::to_string(i + 1), "bijective requires inverse images");
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!p.c(i, j).isUnit())
          chk.add(Violation::Kind::Flag, "c[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]",
                  "bijective requires unit relation constants");
      }
    }
  }

  if (!mapsOk || degreeBound < 3) return report;

  AlgebraPtr a;
  try {
    a = Algebra::createUnchecked(p);
  } catch (const Error& e) {
    chk.add(Violation::Kind::Axiom, "presentation", e.what());
    return report;
  }
  auto x = [&](std::size_t i) { return a->generator(i); };

  // x_k x_j x_i, rewriting either adjacent pair first.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        chk.compare(
            "overlap " + gen(k) + " " + gen(j) + " " + gen(i),
            [&] { return a->mul(relationRhs(*a, j, k), x(i)); },
            [&] { return a->mul(x(k), relationRhs(*a, i, j)); });
      }
    }
  }

  // x_j x_i r for every ring generator r.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t v = 0; v < ring.generatorCount(); ++v) {
        const Coeff r = ring.generator(v);
        chk.compare(
            "overlap " + gen(j) + " " + gen(i) + " " + ring.symbols()[v],
            [&] { return a->mul(relationRhs(*a, i, j), a->constant(r)); },
            [&] {
              Element xr = a->normalize({Term{Monomial::unit(n, i), applyEndo(p.sigma(i), r)},
                                         Term{Monomial(n), applyDeriv(p.delta(i), p.sigma(i), r)}});
              return a->mul(x(j), xr);
            });
      }
    }
  }

  // (x_j x_i) x_m = x_j (x_i x_m) on all generator triples.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t m = 0; m < n; ++m) {
        chk.compare(
            "associativity " + gen(j) + " " + gen(i) + " " + gen(m),
            [&] { return a->mul(a->mul(x(j), x(i)), x(m)); },
            [&] { return a->mul(x(j), a->mul(x(i), x(m))); });
      }
    }
  }

  if (degreeBound > 3) {
    std::vector<Monomial> monos;
    enumerateMonomials(n, degreeBound, monos);
    for (const auto& u : monos) {
      for (const auto& v : monos) {
        if (u.degree() + v.degree() >= degreeBound) continue;
        for (const auto& w : monos) {
          if (u.degree() + v.degree() + w.degree() > degreeBound) continue;
          chk.compare(
              "associativity " + formatMonomial(u) + " " + formatMonomial(v) + " " + formatMonomial(w),
              [&] { return a->mul(a->mul(a->monomial(u), a->monomial(v)), a->monomial(w)); },
              [&] { return a->mul(a->monomial(u), a->mul(a->monomial(v), a->monomial(w))); });
        }
      }
    }
  }
  return report;
}

}  // namespace skewpbw
