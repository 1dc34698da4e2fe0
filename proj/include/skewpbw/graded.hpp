#pragma once

// Degree filtration, associated graded extension and the iterated skew
// polynomial description of quasi-commutative extensions.

#include <vector>

#include "skewpbw/algebra.hpp"

namespace skewpbw {

// f lies in F_m iff deg f <= m (zero lies in every F_m).
bool inFiltration(const Element& f, unsigned m);

// Same ring, sigma_i and c_ij; derivations and tails dropped; quasi-commutative,
// bijective flag kept.
Presentation associatedGradedPresentation(const Presentation& p);

// Top-degree part of f, read in the graded algebra. Throws UndefinedLeader for f = 0.
Element principalSymbol(const Element& f, const AlgebraPtr& graded);

// theta_i acts on R by sigma_i and on x_m (m < i) by x_m -> action[m] x_m.
struct Theta {
  Endomorphism sigma;
  std::vector<Coeff> action;

  friend bool operator==(const Theta&, const Theta&) = default;
};

struct IteratedView {
  CoeffRing ring;
  bool bijective = false;
  std::vector<Theta> theta;
};

// Throws NotQuasiCommutative unless p is flagged quasi-commutative.
IteratedView iteratedSkewView(const Presentation& p);
Presentation presentationFromView(const IteratedView& view);

}  // namespace skewpbw
