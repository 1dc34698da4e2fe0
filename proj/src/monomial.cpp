#include "skewpbw/monomial.hpp"

#include <stdexcept>

namespace skewpbw {

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto x : e_) d += x;
  return d;
}

Monomial Monomial::operator+(const Monomial& other) const {
  if (other.size() != size()) throw std::invalid_argument("monomial length mismatch");
  Monomial m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += other.e_[i];
  return m;
}

std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomial length mismatch");
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : m.exponents()) h = (h ^ x) * 0x100000001b3ULL;
  return h;
}

}  // namespace skewpbw
