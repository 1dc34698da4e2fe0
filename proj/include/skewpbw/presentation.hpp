#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "skewpbw/coeffring.hpp"

namespace skewpbw {

// Degree <= 1 part of a commutation relation: constant + sum_k linear[k] x_{k+1}.
struct Tail {
  Coeff constant;
  std::vector<Coeff> linear;

  bool isZero() const;
  friend bool operator==(const Tail&, const Tail&) = default;
};

// Finite data of a skew PBW extension sigma(R)<x1..xn>:
//   x_i r   = sigma_i(r) x_i + delta_i(r)
//   x_j x_i = c_ij x_i x_j + tail_ij        (i < j)
// Generator indices are 0-based in the API and 1-based in text.
class Presentation {
 public:
  Presentation(CoeffRing ring, std::size_t n);

  const CoeffRing& ring() const { return ring_; }
  std::size_t n() const { return n_; }

  const Endomorphism& sigma(std::size_t i) const { return sigma_.at(i); }
  const Derivation& delta(std::size_t i) const { return delta_.at(i); }
  const Coeff& c(std::size_t i, std::size_t j) const;
  const Tail& tail(std::size_t i, std::size_t j) const;
  bool quasiCommutative() const { return quasiCommutative_; }
  bool bijective() const { return bijective_; }

  Tail zeroTail() const;

  Presentation& setSigma(std::size_t i, Endomorphism sigma);
  Presentation& setDelta(std::size_t i, Derivation delta);
  Presentation& setRelation(std::size_t i, std::size_t j, Coeff c);
  Presentation& setRelation(std::size_t i, std::size_t j, Coeff c, Tail tail);
  Presentation& setFlags(bool quasiCommutative, bool bijective);

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::size_t pairIndex(std::size_t i, std::size_t j) const;

  CoeffRing ring_;
  std::size_t n_;
  std::vector<Endomorphism> sigma_;
  std::vector<Derivation> delta_;
  std::vector<Coeff> c_;     // upper triangle, row-major
  std::vector<Tail> tails_;  // same layout as c_
  bool quasiCommutative_ = false;
  bool bijective_ = false;
};

struct Violation {
  enum class Kind { Axiom, Map, Flag, Overlap };
  Kind kind;
  std::string location;
  std::string detail;
};

struct CheckReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

const char* to_string(Violation::Kind kind) noexcept;

// Axiom and flag checks plus rewriting-consistency checks on overlaps of
// length <= degreeBound: x_k x_j x_i (i<j<k), x_j x_i r for ring generators r,
// and (x_j x_i) x_m = x_j (x_i x_m) on all generator triples. For
// degreeBound > 3 associativity is also sampled exhaustively on standard
// monomial triples of total degree <= degreeBound. Agreement is evidence of
// consistency, not a proof.
CheckReport checkPresentation(const Presentation& p, unsigned degreeBound = 3);

}  // namespace skewpbw
