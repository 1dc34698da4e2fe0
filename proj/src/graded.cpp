#include "skewpbw/graded.hpp"

namespace skewpbw {

bool inFiltration(const Element& f, unsigned m) { return f.degree() <= static_cast<int>(m); }

Presentation associatedGradedPresentation(const Presentation& p) {
  Presentation gr(p.ring(), p.n());
  for (std::size_t i = 0; i < p.n(); ++i) gr.setSigma(i, p.sigma(i));
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j) gr.setRelation(i, j, p.c(i, j));
  gr.setFlags(true, p.bijective());
  return gr;
}

Element principalSymbol(const Element& f, const AlgebraPtr& graded) {
  if (f.isZero()) throw Error(ErrorKind::UndefinedLeader, "the zero element has no principal symbol");
  if (!(graded->ring() == f.algebra()->ring()) || graded->n() != f.algebra()->n())
    throw Error(ErrorKind::PresentationMismatch, "graded algebra does not match the element's algebra");
  const auto top = static_cast<std::uint32_t>(f.degree());
  std::vector<Term> terms;
  for (const auto& t : f.terms())
    if (t.mono.degree() == top) terms.push_back(t);
  return graded->normalize(std::move(terms));
}

IteratedView iteratedSkewView(const Presentation& p) {
  if (!p.quasiCommutative())
    throw Error(ErrorKind::NotQuasiCommutative, "the iterated view needs a quasi-commutative presentation");
  IteratedView view{p.ring(), p.bijective(), {}};
  for (std::size_t i = 0; i < p.n(); ++i) {
    Theta th{p.sigma(i), {}};
    for (std::size_t m = 0; m < i; ++m) th.action.push_back(p.c(m, i));
    view.theta.push_back(std::move(th));
  }
  return view;
}

Presentation presentationFromView(const IteratedView& view) {
  Presentation p(view.ring, view.theta.size());
  for (std::size_t i = 0; i < view.theta.size(); ++i) {
    const Theta& th = view.theta[i];
    if (th.action.size() != i) throw Error(ErrorKind::InvalidArgument, "theta_i must act on exactly i-1 generators");
    p.setSigma(i, th.sigma);
    for (std::size_t m = 0; m < i; ++m) p.setRelation(m, i, th.action[m]);
  }
  p.setFlags(true, view.bijective);
  return p;
}

}  // namespace skewpbw
