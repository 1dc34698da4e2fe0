#pragma once

// Text syntax for coefficients, monomials and elements.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewpbw/algebra.hpp"

namespace skewpbw {

std::string formatCoeff(const Coeff& c, const CoeffRing& ring);
Coeff parseCoeff(std::string_view text, const CoeffRing& ring);

// "x1^2*x2", or "1" for the empty monomial.
std::string formatMonomial(const Monomial& m);

// Terms leader first, e.g. "t*x1 + 1". Compound coefficients are parenthesized.
std::string formatElement(const Element& f);
// Products are evaluated with the algebra's multiplication, so "x2*x1" is
// rewritten to normal form. Division is only by unit constants.
Element parseElement(std::string_view text, const AlgebraPtr& algebra);

namespace detail {
// Shared by the Laurent formatter: joins (coefficient, monomial) pieces.
std::string joinTerms(const std::vector<std::pair<std::string, std::string>>& pieces);
std::string coeffFactor(const Coeff& c, const CoeffRing& ring);
}  // namespace detail

}  // namespace skewpbw
