#include "umrow/coeff_rings.hpp"

#include <sstream>

namespace umrow {

namespace detail {

struct RingData {
  RingKind kind = RingKind::Integers;
  Integer modulus = 0;
  std::shared_ptr<const Ring> base;    // excision only
  std::shared_ptr<const Ideal> ideal;  // excision only
};

}  // namespace detail

namespace {

Integer mod_canonical(const Integer& x, const Integer& n) {
  Integer r = x % n;
  if (r < 0) r += n;
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool divides(const Integer& d, const Integer& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::optional<Integer> inverse_mod(const Integer& a, const Integer& n) {
  if (n == 1) return Integer(0);
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) {
    return std::nullopt;
  }
  return mod_canonical(inv, n);
}

void require_same(const RingElement& a, const RingElement& b) {
  if (a.ring() != b.ring()) {
    fail(ErrorKind::DescriptorMismatch,
         "ring mismatch: " + a.ring().name() + " vs " + b.ring().name());
  }
}

// Reduction of a base-ring integer into canonical form.
Integer base_canonical(const Ring& base, const Integer& x) {
  return base.kind() == RingKind::IntegersMod ? mod_canonical(x, base.modulus())
                                              : x;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DescriptorMismatch: return "descriptor mismatch";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Precondition: return "precondition violated";
    case ErrorKind::DeskScaleLimit: return "desk-scale limit";
    case ErrorKind::PositivityRequired: return "positivity required";
    case ErrorKind::NotInteriorDual: return "functional not in the interior of the dual cone";
    case ErrorKind::Containment: return "containment";
    case ErrorKind::DegenerateDecomposition: return "degenerate decomposition";
    case ErrorKind::UndefinedLeadingTerm: return "undefined leading term";
    case ErrorKind::InvalidToken: return "invalid token";
    case ErrorKind::SizeMismatch: return "size mismatch";
    case ErrorKind::Parse: return "parse error";
  }
  return "error";
}

// ---------------------------------------------------------------- Ring

Ring::Ring() : Ring(integers()) {}

Ring Ring::integers() {
  static const auto data = std::make_shared<const detail::RingData>(
      detail::RingData{RingKind::Integers, 0, nullptr, nullptr});
  return Ring(data);
}

Ring Ring::rationals() {
  static const auto data = std::make_shared<const detail::RingData>(
      detail::RingData{RingKind::Rationals, 0, nullptr, nullptr});
  return Ring(data);
}

Ring Ring::integers_mod(const Integer& n) {
  require(n >= 2, ErrorKind::Precondition, "Z/n requires n >= 2");
  return Ring(std::make_shared<const detail::RingData>(
      detail::RingData{RingKind::IntegersMod, n, nullptr, nullptr}));
}

Ring Ring::excision(const Ring& base, const Ideal& ideal) {
  require(base.kind() == RingKind::Integers ||
              base.kind() == RingKind::IntegersMod,
          ErrorKind::Unsupported, "excision base must be Z or Z/n");
  require(ideal.ring() == base, ErrorKind::DescriptorMismatch,
          "excision ideal must be an ideal of the base ring");
  return Ring(std::make_shared<const detail::RingData>(detail::RingData{
      RingKind::Excision, base.modulus(), std::make_shared<const Ring>(base),
      std::make_shared<const Ideal>(ideal)}));
}

RingKind Ring::kind() const { return data_->kind; }
const Integer& Ring::modulus() const { return data_->modulus; }

const Ring& Ring::base() const {
  require(kind() == RingKind::Excision, ErrorKind::DescriptorMismatch,
          "base() on a non-excision ring");
  return *data_->base;
}

const Ideal& Ring::ideal() const {
  require(kind() == RingKind::Excision, ErrorKind::DescriptorMismatch,
          "ideal() on a non-excision ring");
  return *data_->ideal;
}

bool Ring::is_field() const {
  if (kind() == RingKind::Rationals) return true;
  if (kind() == RingKind::IntegersMod) {
    return mpz_probab_prime_p(modulus().get_mpz_t(), 30) > 0;
  }
  return false;
}

bool Ring::is_finite() const {
  return kind() == RingKind::IntegersMod ||
         (kind() == RingKind::Excision &&
          data_->base->kind() == RingKind::IntegersMod);
}

std::string Ring::name() const {
  switch (kind()) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::IntegersMod: return "Z/" + modulus().get_str();
    case RingKind::Excision:
      return data_->base->name() + " (+) " + data_->ideal->to_string();
  }
  return "?";
}

RingElement Ring::zero() const { return element(0L); }
RingElement Ring::one() const { return element(1L); }
RingElement Ring::element(long value) const { return element(Integer(value)); }

RingElement Ring::element(const Integer& value) const {
  switch (kind()) {
    case RingKind::Integers: return RingElement(*this, value);
    case RingKind::Rationals: return RingElement(*this, Rational(value));
    case RingKind::IntegersMod:
      return RingElement(*this, mod_canonical(value, modulus()));
    case RingKind::Excision: return element(value, Integer(0));
  }
  fail(ErrorKind::Unsupported, "unknown ring kind");
}

RingElement Ring::element(const Rational& value) const {
  if (kind() == RingKind::Rationals) {
    Rational q = value;
    q.canonicalize();
    return RingElement(*this, q);
  }
  require(value.get_den() == 1, ErrorKind::Precondition,
          "non-integral value " + value.get_str() + " in " + name());
  return element(Integer(value.get_num()));
}

RingElement Ring::element(const Integer& r, const Integer& i) const {
  require(kind() == RingKind::Excision, ErrorKind::DescriptorMismatch,
          "pair element in non-excision ring " + name());
  const Ring& b = *data_->base;
  ExcisionPair p{base_canonical(b, r), base_canonical(b, i)};
  require(data_->ideal->contains(b.element(p.i)), ErrorKind::Precondition,
          "second coordinate " + p.i.get_str() + " not in " +
              data_->ideal->to_string());
  return RingElement(*this, std::move(p));
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.data_ == b.data_) return true;
  if (a.kind() != b.kind() || a.modulus() != b.modulus()) return false;
  if (a.kind() == RingKind::Excision) {
    return *a.data_->base == *b.data_->base && *a.data_->ideal == *b.data_->ideal;
  }
  return true;
}

// ---------------------------------------------------------- RingElement

RingElement::RingElement() : ring_(Ring::integers()), payload_(Integer(0)) {}

const Integer& RingElement::integer() const {
  const auto* v = std::get_if<Integer>(&payload_);
  require(v != nullptr, ErrorKind::DescriptorMismatch,
          "integer() on element of " + ring_.name());
  return *v;
}

const Rational& RingElement::rational() const {
  const auto* v = std::get_if<Rational>(&payload_);
  require(v != nullptr, ErrorKind::DescriptorMismatch,
          "rational() on element of " + ring_.name());
  return *v;
}

const ExcisionPair& RingElement::pair() const {
  const auto* v = std::get_if<ExcisionPair>(&payload_);
  require(v != nullptr, ErrorKind::DescriptorMismatch,
          "pair() on element of " + ring_.name());
  return *v;
}

bool RingElement::is_zero() const {
  if (const auto* z = std::get_if<Integer>(&payload_)) return *z == 0;
  if (const auto* q = std::get_if<Rational>(&payload_)) return *q == 0;
  const auto& p = std::get<ExcisionPair>(payload_);
  return p.r == 0 && p.i == 0;
}

bool RingElement::is_one() const {
  if (const auto* z = std::get_if<Integer>(&payload_)) return *z == 1;
  if (const auto* q = std::get_if<Rational>(&payload_)) return *q == 1;
  const auto& p = std::get<ExcisionPair>(payload_);
  return p.r == 1 && p.i == 0;
}

std::string RingElement::to_string() const {
  if (const auto* z = std::get_if<Integer>(&payload_)) return z->get_str();
  if (const auto* q = std::get_if<Rational>(&payload_)) return q->get_str();
  const auto& p = std::get<ExcisionPair>(payload_);
  return "(" + p.r.get_str() + ", " + p.i.get_str() + ")";
}

bool operator==(const RingElement& a, const RingElement& b) {
  if (a.ring_ != b.ring_) return false;
  if (a.payload_.index() != b.payload_.index()) return false;
  if (const auto* z = std::get_if<Integer>(&a.payload_)) {
    return *z == std::get<Integer>(b.payload_);
  }
  if (const auto* q = std::get_if<Rational>(&a.payload_)) {
    return *q == std::get<Rational>(b.payload_);
  }
  const auto& p = std::get<ExcisionPair>(a.payload_);
  const auto& o = std::get<ExcisionPair>(b.payload_);
  return p.r == o.r && p.i == o.i;
}

// ------------------------------------------------------------ arithmetic

RingElement ring_add(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  const Ring& R = a.ring();
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod: return R.element(Integer(a.integer() + b.integer()));
    case RingKind::Rationals: return R.element(Rational(a.rational() + b.rational()));
    case RingKind::Excision:
      return R.element(Integer(a.pair().r + b.pair().r),
                       Integer(a.pair().i + b.pair().i));
  }
  fail(ErrorKind::Unsupported, "unknown ring kind");
}

RingElement ring_neg(const RingElement& a) {
  const Ring& R = a.ring();
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod: return R.element(Integer(-a.integer()));
    case RingKind::Rationals: return R.element(Rational(-a.rational()));
    case RingKind::Excision:
      return R.element(Integer(-a.pair().r), Integer(-a.pair().i));
  }
  fail(ErrorKind::Unsupported, "unknown ring kind");
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
  return ring_add(a, ring_neg(b));
}

RingElement ring_mul(const RingElement& a, const RingElement& b) {
  require_same(a, b);
  const Ring& R = a.ring();
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod: return R.element(Integer(a.integer() * b.integer()));
    case RingKind::Rationals: return R.element(Rational(a.rational() * b.rational()));
    case RingKind::Excision: {
      // (r1, i1)(r2, i2) = (r1 r2, r1 i2 + r2 i1 + i1 i2)
      const auto& x = a.pair();
      const auto& y = b.pair();
      return R.element(Integer(x.r * y.r),
                       Integer(x.r * y.i + y.r * x.i + x.i * y.i));
    }
  }
  fail(ErrorKind::Unsupported, "unknown ring kind");
}

std::optional<RingElement> ring_inverse(const RingElement& a) {
  const Ring& R = a.ring();
  switch (R.kind()) {
    case RingKind::Integers: {
      const Integer& v = a.integer();
      if (v == 1 || v == -1) return a;
      return std::nullopt;
    }
    case RingKind::Rationals:
      if (a.rational() == 0) return std::nullopt;
      return R.element(Rational(1 / a.rational()));
    case RingKind::IntegersMod: {
      auto inv = inverse_mod(a.integer(), R.modulus());
      if (!inv) return std::nullopt;
      return R.element(*inv);
    }
    case RingKind::Excision: {
      // Solve (r, i)(x, y) = (1, 0): x = r^-1 and y (r + i) = -i x.
      const Ring& B = R.base();
      const auto& p = a.pair();
      auto x = ring_inverse(B.element(p.r));
      auto s = ring_inverse(B.element(Integer(p.r + p.i)));
      if (!x || !s) return std::nullopt;
      RingElement y = ring_neg(B.element(p.i) * *x * *s);
      RingElement out = R.element(x->integer(), y.integer());
      return out;
    }
  }
  return std::nullopt;
}

RingElement excision_project(const RingElement& x) {
  require(x.ring().kind() == RingKind::Excision, ErrorKind::DescriptorMismatch,
          "excision_project on element of " + x.ring().name());
  return x.ring().base().element(Integer(x.pair().r + x.pair().i));
}

std::vector<std::pair<Integer, int>> factor_modulus(const Integer& n) {
  require(n >= 1 && n <= 1000000000, ErrorKind::DeskScaleLimit,
          "modulus outside the trial-division range [1, 1e9]");
  std::vector<std::pair<Integer, int>> out;
  unsigned long m = n.get_ui();
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(Integer(p), e);
  }
  if (m > 1) out.emplace_back(Integer(m), 1);
  return out;
}

namespace {

Integer radical_of(const Integer& n) {
  Integer rad = 1;
  for (const auto& [p, e] : factor_modulus(n)) rad *= p;
  return rad;
}

}  // namespace

bool is_in_jacobson_radical(const RingElement& a) {
  const Ring& R = a.ring();
  if (R.kind() == RingKind::IntegersMod) {
    return divides(radical_of(R.modulus()), a.integer());
  }
  if (R.kind() == RingKind::Excision && R.base().kind() == RingKind::IntegersMod) {
    // Maximal ideals of R (+) I are the preimages of maximal ideals of R under
    // (r, i) -> r and (r, i) -> r + i.
    Integer rad = radical_of(R.modulus());
    return divides(rad, a.pair().r) && divides(rad, Integer(a.pair().r + a.pair().i));
  }
  fail(ErrorKind::Unsupported,
       "Jacobson radical membership is only decided for finite rings, got " +
           R.name());
}

RingElement reduce_representative(const RingElement& a, const Ring& target) {
  require(a.ring().kind() == RingKind::Integers ||
              a.ring().kind() == RingKind::IntegersMod,
          ErrorKind::Unsupported, "representative reduction from " + a.ring().name());
  require(target.kind() == RingKind::Integers ||
              target.kind() == RingKind::IntegersMod,
          ErrorKind::Unsupported, "representative reduction into " + target.name());
  return target.element(a.integer());
}

// ---------------------------------------------------------------- Ideal

Ideal::Ideal() : ring_(), divisor_(0), second_divisor_(0) {}

Ideal Ideal::generated_by(const Ring& ring, std::vector<RingElement> gens) {
  for (const auto& g : gens) {
    require(g.ring() == ring, ErrorKind::DescriptorMismatch,
            "ideal generator " + g.to_string() + " not in " + ring.name());
  }
  Ideal I;
  I.ring_ = ring;
  I.gens_ = std::move(gens);
  switch (ring.kind()) {
    case RingKind::Integers: {
      Integer d = 0;
      for (const auto& g : I.gens_) d = gcd(d, g.integer());
      I.divisor_ = d;
      break;
    }
    case RingKind::IntegersMod: {
      Integer d = ring.modulus();
      for (const auto& g : I.gens_) d = gcd(d, g.integer());
      I.divisor_ = d;
      break;
    }
    case RingKind::Rationals: {
      bool nonzero = false;
      for (const auto& g : I.gens_) nonzero = nonzero || !g.is_zero();
      I.divisor_ = nonzero ? 1 : 0;
      break;
    }
    case RingKind::Excision: {
      // Generators must be of the form (a, 0) or (0, b). The ideal they
      // generate is A (+) (I A + B).
      const Integer n = ring.modulus();  // 0 over Z
      Integer dA = n;
      Integer dB = n;
      for (const auto& g : I.gens_) {
        const auto& p = g.pair();
        require(p.r == 0 || p.i == 0, ErrorKind::Unsupported,
                "excision ideal generators must be (a, 0) or (0, b)");
        dA = gcd(dA, p.r);
        dB = gcd(dB, p.i);
      }
      dB = gcd(dB, Integer(ring.ideal().divisor() * dA));
      if (n != 0) dB = gcd(dB, n);
      I.divisor_ = dA;
      I.second_divisor_ = dB;
      break;
    }
  }
  return I;
}

Ideal Ideal::zero(const Ring& ring) { return generated_by(ring, {}); }

Ideal Ideal::unit(const Ring& ring) { return generated_by(ring, {ring.one()}); }

bool Ideal::contains(const RingElement& x) const {
  if (x.ring() != ring_) return false;
  switch (ring_.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod: return divides(divisor_, x.integer());
    case RingKind::Rationals: return divisor_ == 1 || x.is_zero();
    case RingKind::Excision:
      return divides(divisor_, x.pair().r) && divides(second_divisor_, x.pair().i);
  }
  return false;
}

bool Ideal::is_unit_ideal() const { return contains(ring_.one()); }

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "(";
  if (ring_.kind() == RingKind::Excision) {
    os << divisor_.get_str() << ") (+) (" << second_divisor_.get_str();
  } else {
    os << divisor_.get_str();
  }
  os << ")";
  return os.str();
}

bool operator==(const Ideal& a, const Ideal& b) {
  return a.ring_ == b.ring_ && a.divisor_ == b.divisor_ &&
         a.second_divisor_ == b.second_divisor_;
}

}  // namespace umrow
