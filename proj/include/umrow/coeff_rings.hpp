#pragma once

// Exact coefficient rings: Z, Q, Z/n and the excision ring R (+) I over Z or
// Z/n. Elements always hold canonical representatives, so structural
// equality is ring equality.

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "umrow/errors.hpp"

namespace umrow {

using Integer = mpz_class;
using Rational = mpq_class;

enum class RingKind { Integers, Rationals, IntegersMod, Excision };

class Ideal;
class RingElement;

namespace detail {
struct RingData;
}

class Ring {
 public:
  // Z.
  Ring();

  static Ring integers();
  static Ring rationals();
  static Ring integers_mod(const Integer& n);
  // R (+) I. The base must be Z or Z/n and `ideal` must be an ideal of it.
  static Ring excision(const Ring& base, const Ideal& ideal);

  RingKind kind() const;
  // Modulus of Z/n, or of the base of an excision ring over Z/n; 0 otherwise.
  const Integer& modulus() const;
  const Ring& base() const;
  const Ideal& ideal() const;

  bool is_field() const;
  bool is_finite() const;
  std::string name() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement element(long value) const;
  RingElement element(const Integer& value) const;
  RingElement element(const Rational& value) const;
  // Excision pair (r, i); throws Precondition when i is not in the ideal.
  RingElement element(const Integer& r, const Integer& i) const;

  friend bool operator==(const Ring& a, const Ring& b);
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

 private:
  explicit Ring(std::shared_ptr<const detail::RingData> data)
      : data_(std::move(data)) {}

  std::shared_ptr<const detail::RingData> data_;
};

struct ExcisionPair {
  Integer r;
  Integer i;
};

class RingElement {
 public:
  using Carrier = Ring;

  // 0 in Z.
  RingElement();

  static RingElement zero(const Ring& ring) { return ring.zero(); }
  static RingElement one(const Ring& ring) { return ring.one(); }

  const Ring& ring() const { return ring_; }
  const Ring& carrier() const { return ring_; }

  // Payload accessors; each throws DescriptorMismatch on the wrong kind.
  const Integer& integer() const;       // Z and Z/n (residue in [0, n))
  const Rational& rational() const;     // Q
  const ExcisionPair& pair() const;     // R (+) I

  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) {
    return !(a == b);
  }

 private:
  friend class Ring;
  using Payload = std::variant<Integer, Rational, ExcisionPair>;

  RingElement(Ring ring, Payload payload)
      : ring_(std::move(ring)), payload_(std::move(payload)) {}

  Ring ring_;
  Payload payload_;
};

// Ideal of Z, Q, Z/n, or a product-shaped ideal A (+) B of an excision ring.
// Membership is decided from a canonical divisor computed at construction.
class Ideal {
 public:
  // Zero ideal of Z.
  Ideal();

  static Ideal generated_by(const Ring& ring, std::vector<RingElement> gens);
  static Ideal zero(const Ring& ring);
  static Ideal unit(const Ring& ring);

  const Ring& ring() const { return ring_; }
  const std::vector<RingElement>& generators() const { return gens_; }

  bool contains(const RingElement& x) const;
  bool is_unit_ideal() const;

  // Canonical generator: gcd of the generators (and the modulus for Z/n).
  // For excision ideals this is the divisor of the first coordinate.
  const Integer& divisor() const { return divisor_; }
  // Excision ideals only: divisor of the second coordinate.
  const Integer& second_divisor() const { return second_divisor_; }

  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b);
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }

 private:
  Ring ring_;
  std::vector<RingElement> gens_;
  Integer divisor_;
  Integer second_divisor_;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_mul(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);

inline RingElement operator+(const RingElement& a, const RingElement& b) {
  return ring_add(a, b);
}
inline RingElement operator-(const RingElement& a, const RingElement& b) {
  return ring_sub(a, b);
}
inline RingElement operator*(const RingElement& a, const RingElement& b) {
  return ring_mul(a, b);
}
inline RingElement operator-(const RingElement& a) { return ring_neg(a); }

// nullopt when `a` is not a unit.
std::optional<RingElement> ring_inverse(const RingElement& a);
inline bool is_unit(const RingElement& a) { return ring_inverse(a).has_value(); }
inline std::optional<RingElement> inverse(const RingElement& a) {
  return ring_inverse(a);
}

// phi(r, i) = r + i.
RingElement excision_project(const RingElement& x);

// Z/n and excision rings over Z/n only.
bool is_in_jacobson_radical(const RingElement& a);

// Trial-division factorisation; n must be in [1, 10^9].
std::vector<std::pair<Integer, int>> factor_modulus(const Integer& n);

// Maps a Z or Z/n element to Z/m (or Z) by reducing its representative.
// This is a ring map only when m divides n; lifts use it too.
RingElement reduce_representative(const RingElement& a, const Ring& target);

}  // namespace umrow
