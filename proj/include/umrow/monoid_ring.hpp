#pragma once

// R[M]: finite sums of coefficients times monoid exponents, with the degree
// machinery used for monic detection and the Nagata substitution on
// polynomial rings R[t_1, ..., t_r] = R[Z_+^r].

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "umrow/coeff_rings.hpp"
#include "umrow/monoid_geometry.hpp"

namespace umrow {

struct MonoidRing {
  Ring coeffs;
  AffineMonoid monoid;

  friend bool operator==(const MonoidRing& a, const MonoidRing& b) {
    return a.coeffs == b.coeffs && a.monoid == b.monoid;
  }
  friend bool operator!=(const MonoidRing& a, const MonoidRing& b) { return !(a == b); }
};

class MonoidRingElement {
 public:
  using Carrier = MonoidRing;
  using Terms = std::map<Vec, RingElement>;

  MonoidRingElement(MonoidRing carrier, Terms terms);

  static MonoidRingElement zero(const MonoidRing& R) { return {R, {}}; }
  static MonoidRingElement one(const MonoidRing& R);
  static MonoidRingElement constant(const MonoidRing& R, const RingElement& c);
  static MonoidRingElement monomial(const MonoidRing& R, const Vec& exponent,
                                    const RingElement& c);
  static MonoidRingElement monomial(const MonoidRing& R, const Vec& exponent);

  const MonoidRing& carrier() const { return carrier_; }
  const Terms& terms() const { return terms_; }
  // Coefficient of the given exponent (zero when absent).
  RingElement coefficient(const Vec& exponent) const;
  RingElement constant_term() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // Max grading degree over the support; 0 for the zero element.
  long long support_degree() const;
  std::string to_string() const;

  friend bool operator==(const MonoidRingElement& a, const MonoidRingElement& b) {
    return a.carrier_ == b.carrier_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MonoidRingElement& a, const MonoidRingElement& b) {
    return !(a == b);
  }

 private:
  struct Trusted {};
  MonoidRingElement(MonoidRing carrier, Terms terms, Trusted)
      : carrier_(std::move(carrier)), terms_(std::move(terms)) {}

  friend MonoidRingElement mr_add(const MonoidRingElement&, const MonoidRingElement&);
  friend MonoidRingElement mr_mul(const MonoidRingElement&, const MonoidRingElement&);
  friend MonoidRingElement mr_neg(const MonoidRingElement&);
  friend MonoidRingElement scale_terms(const MonoidRingElement&, const RingElement&);

  MonoidRing carrier_;
  Terms terms_;
};

MonoidRingElement mr_add(const MonoidRingElement& f, const MonoidRingElement& g);
MonoidRingElement mr_mul(const MonoidRingElement& f, const MonoidRingElement& g);
MonoidRingElement mr_neg(const MonoidRingElement& f);
MonoidRingElement scale_terms(const MonoidRingElement& f, const RingElement& c);

inline MonoidRingElement operator+(const MonoidRingElement& f, const MonoidRingElement& g) {
  return mr_add(f, g);
}
inline MonoidRingElement operator-(const MonoidRingElement& f) { return mr_neg(f); }
inline MonoidRingElement operator-(const MonoidRingElement& f, const MonoidRingElement& g) {
  return mr_add(f, mr_neg(g));
}
inline MonoidRingElement operator*(const MonoidRingElement& f, const MonoidRingElement& g) {
  return mr_mul(f, g);
}

MonoidRingElement power(const MonoidRingElement& f, unsigned k);

// Units of R[M] for positive M: unit constant term and nilpotent remainder.
std::optional<MonoidRingElement> inverse(const MonoidRingElement& f);
inline bool is_unit(const MonoidRingElement& f) { return inverse(f).has_value(); }

bool is_nilpotent(const RingElement& a);

// Membership in the extended ideal I R[M]: every coefficient lies in I.
bool ideal_contains(const Ideal& I, const MonoidRingElement& f);
inline bool ideal_contains(const Ideal& I, const RingElement& a) { return I.contains(a); }

struct DegreeAssignment {
  Vec functional;
  long long operator()(const Vec& x) const { return dot(functional, x); }
};

struct LeadingTerm {
  MonoidRingElement top;                 // H(f): all terms of maximal degree
  long long degree = 0;
  std::optional<RingElement> coefficient;  // L(f), only when H(f) is one monomial
  std::optional<Vec> exponent;
  bool single() const { return coefficient.has_value(); }
};

// Throws UndefinedLeadingTerm for f = 0.
LeadingTerm leading_term(const MonoidRingElement& f, const DegreeAssignment& d);

// H(f) = u m^c for a unit u and c >= 0.
bool is_monic_in(const MonoidRingElement& f, const Vec& m, const DegreeAssignment& d);

// Free monoid Z_+^r in standard coordinates.
bool is_polynomial_ring(const MonoidRing& R);

// t_j -> t_j + t_1^c for j >= 2.
MonoidRingElement nagata_twist(const MonoidRingElement& f, unsigned c);

// Drops every term with positive t_1-exponent.
MonoidRingElement evaluate_at_t1_zero(const MonoidRingElement& f);

struct TiltedAlgebraDescriptor {
  int ambient_rank = 0;
  std::function<bool(const Vec&)> membership;
  std::function<long long(const Vec&)> tilt_exponent;
};

bool tilted_membership(const TiltedAlgebraDescriptor& T, const MonoidRingElement& f);

// Checks t_1^p m in T for p in [p_m, p_m + extra] on each sample monomial.
bool tilt_invariant_holds(const TiltedAlgebraDescriptor& T, const std::vector<Vec>& samples,
                          int extra = 4);

}  // namespace umrow
