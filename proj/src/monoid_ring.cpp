#include "umrow/monoid_ring.hpp"

#include <sstream>

namespace umrow {

namespace {

void require_same(const MonoidRingElement& f, const MonoidRingElement& g) {
  require(f.carrier() == g.carrier(), ErrorKind::DescriptorMismatch,
          "monoid ring elements over different carriers");
}

void require_polynomial(const MonoidRing& R, const char* what) {
  require(is_polynomial_ring(R), ErrorKind::Unsupported,
          std::string(what) + " needs a polynomial ring Z_+^r");
}

}  // namespace

MonoidRingElement::MonoidRingElement(MonoidRing carrier, Terms terms)
    : carrier_(std::move(carrier)) {
  for (auto& [e, c] : terms) {
    require(c.ring() == carrier_.coeffs, ErrorKind::DescriptorMismatch,
            "coefficient " + c.to_string() + " not in " + carrier_.coeffs.name());
    require(monoid_membership(carrier_.monoid, e), ErrorKind::Precondition,
            "exponent is not a monoid member");
    if (!c.is_zero()) terms_.emplace(e, c);
  }
}

MonoidRingElement MonoidRingElement::one(const MonoidRing& R) {
  return constant(R, R.coeffs.one());
}

MonoidRingElement MonoidRingElement::constant(const MonoidRing& R, const RingElement& c) {
  return MonoidRingElement(R, {{Vec(R.monoid.ambient_rank(), 0), c}});
}

MonoidRingElement MonoidRingElement::monomial(const MonoidRing& R, const Vec& exponent,
                                              const RingElement& c) {
  return MonoidRingElement(R, {{exponent, c}});
}

MonoidRingElement MonoidRingElement::monomial(const MonoidRing& R, const Vec& exponent) {
  return monomial(R, exponent, R.coeffs.one());
}

RingElement MonoidRingElement::coefficient(const Vec& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? carrier_.coeffs.zero() : it->second;
}

RingElement MonoidRingElement::constant_term() const {
  return coefficient(Vec(carrier_.monoid.ambient_rank(), 0));
}

bool MonoidRingElement::is_one() const {
  return is_constant() && !terms_.empty() && terms_.begin()->second.is_one();
}

bool MonoidRingElement::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && umrow::is_zero(terms_.begin()->first));
}

long long MonoidRingElement::support_degree() const {
  long long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, carrier_.monoid.degree(e));
  return d;
}

std::string MonoidRingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    if (!umrow::is_zero(e)) {
      os << "*x^(";
      for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
      os << ")";
    }
  }
  return os.str();
}

MonoidRingElement mr_add(const MonoidRingElement& f, const MonoidRingElement& g) {
  require_same(f, g);
  MonoidRingElement::Terms out = f.terms_;
  for (const auto& [e, c] : g.terms_) {
    auto it = out.find(e);
    if (it == out.end()) {
      out.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return MonoidRingElement(f.carrier_, std::move(out), MonoidRingElement::Trusted{});
}

MonoidRingElement mr_mul(const MonoidRingElement& f, const MonoidRingElement& g) {
  require_same(f, g);
  MonoidRingElement::Terms out;
  for (const auto& [e1, c1] : f.terms_) {
    for (const auto& [e2, c2] : g.terms_) {
      RingElement c = c1 * c2;
      if (c.is_zero()) continue;
      Vec e = add(e1, e2);
      auto it = out.find(e);
      if (it == out.end()) {
        out.emplace(std::move(e), std::move(c));
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return MonoidRingElement(f.carrier_, std::move(out), MonoidRingElement::Trusted{});
}

MonoidRingElement mr_neg(const MonoidRingElement& f) {
  MonoidRingElement::Terms out;
  for (const auto& [e, c] : f.terms_) out.emplace(e, -c);
  return MonoidRingElement(f.carrier_, std::move(out), MonoidRingElement::Trusted{});
}

MonoidRingElement scale_terms(const MonoidRingElement& f, const RingElement& s) {
  require(s.ring() == f.carrier().coeffs, ErrorKind::DescriptorMismatch,
          "scalar outside the coefficient ring");
  MonoidRingElement::Terms out;
  for (const auto& [e, c] : f.terms_) {
    RingElement p = c * s;
    if (!p.is_zero()) out.emplace(e, std::move(p));
  }
  return MonoidRingElement(f.carrier_, std::move(out), MonoidRingElement::Trusted{});
}

MonoidRingElement power(const MonoidRingElement& f, unsigned k) {
  MonoidRingElement result = MonoidRingElement::one(f.carrier());
  MonoidRingElement base = f;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool is_nilpotent(const RingElement& a) {
  switch (a.ring().kind()) {
    case RingKind::Integers:
    case RingKind::Rationals: return a.is_zero();
    case RingKind::IntegersMod: return is_in_jacobson_radical(a);
    case RingKind::Excision:
      if (a.ring().base().kind() == RingKind::IntegersMod) return is_in_jacobson_radical(a);
      return a.is_zero();
  }
  return false;
}

std::optional<MonoidRingElement> inverse(const MonoidRingElement& f) {
  require(f.carrier().monoid.is_positive(), ErrorKind::PositivityRequired,
          "unit detection needs a positive monoid");
  auto u = ring_inverse(f.constant_term());
  if (!u) return std::nullopt;
  const MonoidRing& R = f.carrier();
  MonoidRingElement rest = f - MonoidRingElement::constant(R, f.constant_term());
  for (const auto& [e, c] : rest.terms())
    if (!is_nilpotent(c)) return std::nullopt;
  // f = u0 (1 + v) with v nilpotent: f^{-1} = u0^{-1} sum (-v)^k.
  MonoidRingElement v = scale_terms(rest, *u);
  MonoidRingElement neg_v = -v;
  MonoidRingElement sum = MonoidRingElement::one(R);
  MonoidRingElement term = MonoidRingElement::one(R);
  for (int k = 0; k < 4096; ++k) {
    term = term * neg_v;
    if (term.is_zero()) return scale_terms(sum, *u);
    sum = sum + term;
  }
  fail(ErrorKind::DeskScaleLimit, "nilpotency index too large");
}

bool ideal_contains(const Ideal& I, const MonoidRingElement& f) {
  for (const auto& [e, c] : f.terms())
    if (!I.contains(c)) return false;
  return true;
}

LeadingTerm leading_term(const MonoidRingElement& f, const DegreeAssignment& d) {
  require(!f.is_zero(), ErrorKind::UndefinedLeadingTerm, "the zero element has no leading term");
  long long top = 0;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    long long v = d(e);
    if (first || v > top) top = v;
    first = false;
  }
  MonoidRingElement::Terms terms;
  for (const auto& [e, c] : f.terms())
    if (d(e) == top) terms.emplace(e, c);
  LeadingTerm lt{MonoidRingElement(f.carrier(), terms), top, std::nullopt, std::nullopt};
  if (terms.size() == 1) {
    lt.coefficient = terms.begin()->second;
    lt.exponent = terms.begin()->first;
  }
  return lt;
}

bool is_monic_in(const MonoidRingElement& f, const Vec& m, const DegreeAssignment& d) {
  if (f.is_zero()) return false;
  auto lt = leading_term(f, d);
  if (!lt.single() || !is_unit(*lt.coefficient)) return false;
  const Vec& x = *lt.exponent;
  if (umrow::is_zero(x)) return true;
  // x = c m with c a positive integer.
  std::size_t k = 0;
  while (k < m.size() && m[k] == 0) ++k;
  if (k == m.size() || x[k] % m[k] != 0) return false;
  long long c = x[k] / m[k];
  return c > 0 && scale(m, c) == x;
}

bool is_polynomial_ring(const MonoidRing& R) {
  return R.monoid == AffineMonoid::free(R.monoid.ambient_rank());
}

MonoidRingElement nagata_twist(const MonoidRingElement& f, unsigned c) {
  const MonoidRing& R = f.carrier();
  require_polynomial(R, "the Nagata substitution");
  const int r = R.monoid.ambient_rank();
  std::vector<MonoidRingElement> images;
  for (int j = 0; j < r; ++j) {
    Vec tj(r, 0);
    tj[j] = 1;
    MonoidRingElement img = MonoidRingElement::monomial(R, tj);
    if (j > 0) {
      Vec t1c(r, 0);
      t1c[0] = c;
      img = img + MonoidRingElement::monomial(R, t1c);
    }
    images.push_back(img);
  }
  std::vector<std::map<long long, MonoidRingElement>> powers(r);
  auto image_power = [&](int j, long long k) -> const MonoidRingElement& {
    auto it = powers[j].find(k);
    if (it == powers[j].end()) {
      it = powers[j].emplace(k, power(images[j], static_cast<unsigned>(k))).first;
    }
    return it->second;
  };
  MonoidRingElement out = MonoidRingElement::zero(R);
  for (const auto& [e, coef] : f.terms()) {
    MonoidRingElement term = MonoidRingElement::constant(R, coef);
    for (int j = 0; j < r; ++j)
      if (e[j] > 0) term = term * image_power(j, e[j]);
    out = out + term;
  }
  return out;
}

MonoidRingElement evaluate_at_t1_zero(const MonoidRingElement& f) {
  require_polynomial(f.carrier(), "evaluation at t_1 = 0");
  MonoidRingElement::Terms out;
  for (const auto& [e, c] : f.terms())
    if (e[0] == 0) out.emplace(e, c);
  return MonoidRingElement(f.carrier(), std::move(out));
}

bool tilted_membership(const TiltedAlgebraDescriptor& T, const MonoidRingElement& f) {
  require(is_polynomial_ring(f.carrier()), ErrorKind::Unsupported,
          "tilted algebras live in polynomial rings");
  for (const auto& [e, c] : f.terms())
    if (!T.membership(e)) return false;
  return true;
}

bool tilt_invariant_holds(const TiltedAlgebraDescriptor& T, const std::vector<Vec>& samples,
                          int extra) {
  for (const auto& m : samples) {
    const long long p0 = T.tilt_exponent(m);
    for (long long p = p0; p <= p0 + extra; ++p) {
      Vec x(m);
      x[0] += p;
      if (!T.membership(x)) return false;
    }
  }
  return true;
}

}  // namespace umrow
