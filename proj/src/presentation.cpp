#include "skewpbw/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewpbw {

bool Tail::isZero() const {
  return constant.isZero() && std::all_of(linear.begin(), linear.end(), [](const Coeff& c) { return c.isZero(); });
}

Presentation::Presentation(CoeffRing ring, std::size_t n)
    : ring_(std::move(ring)), n_(n), sigma_(n), delta_(n) {
  if (n == 0) throw Error(ErrorKind::InvalidPresentation, "a presentation needs at least one generator");
  const std::size_t pairs = n * (n - 1) / 2;
  c_.assign(pairs, ring_.one());
  tails_.assign(pairs, zeroTail());
}

std::size_t Presentation::pairIndex(std::size_t i, std::size_t j) const {
  if (!(i < j && j < n_)) throw std::out_of_range("relation index pair must satisfy i < j < n");
  // Rows 0..i-1 hold (n-1) + (n-2) + ... entries.
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

const Coeff& Presentation::c(std::size_t i, std::size_t j) const { return c_[pairIndex(i, j)]; }

const Tail& Presentation::tail(std::size_t i, std::size_t j) const { return tails_[pairIndex(i, j)]; }

Tail Presentation::zeroTail() const { return Tail{ring_.zero(), std::vector<Coeff>(n_, ring_.zero())}; }

Presentation& Presentation::setSigma(std::size_t i, Endomorphism sigma) {
  sigma_.at(i) = std::move(sigma);
  return *this;
}

Presentation& Presentation::setDelta(std::size_t i, Derivation delta) {
  delta_.at(i) = std::move(delta);
  return *this;
}

Presentation& Presentation::setRelation(std::size_t i, std::size_t j, Coeff c) {
  return setRelation(i, j, std::move(c), zeroTail());
}

Presentation& Presentation::setRelation(std::size_t i, std::size_t j, Coeff c, Tail tail) {
  const std::size_t k = pairIndex(i, j);
  if (tail.linear.size() != n_) throw Error(ErrorKind::InvalidPresentation, "tail must list one coefficient per generator");
  ring_.require(c);
  ring_.require(tail.constant);
  for (const auto& d : tail.linear) ring_.require(d);
  c_[k] = std::move(c);
  tails_[k] = std::move(tail);
  return *this;
}

Presentation& Presentation::setFlags(bool quasiCommutative, bool bijective) {
  quasiCommutative_ = quasiCommutative;
  bijective_ = bijective;
  return *this;
}

const char* to_string(Violation::Kind kind) noexcept {
  switch (kind) {
    case Violation::Kind::Axiom: return "axiom";
    case Violation::Kind::Map: return "map";
    case Violation::Kind::Flag: return "flag";
    case Violation::Kind::Overlap: return "overlap";
  }
  return "violation";
}

}  // namespace skewpbw
