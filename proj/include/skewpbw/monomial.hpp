#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace skewpbw {

// Standard monomial x1^a1 ... xn^an, stored as its exponent vector.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : e_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}

  static Monomial unit(std::size_t n, std::size_t i) {
    Monomial m(n);
    m.e_.at(i) = 1;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }
  std::uint32_t degree() const;
  bool isOne() const { return degree() == 0; }

  Monomial with(std::size_t i, std::uint32_t value) const {
    Monomial m = *this;
    m.e_.at(i) = value;
    return m;
  }
  Monomial operator+(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

// Graded order: higher total degree wins, ties broken at the first differing
// exponent with x1 heaviest. Throws std::invalid_argument on length mismatch.
std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b);

// Strict "a comes before b" in descending canonical order.
struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return compareMonomials(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace skewpbw
