#include "umrow/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace umrow::io {

namespace {

Integer parse_integer(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (!j.is_string()) fail(ErrorKind::Parse, "expected an integer string");
  const std::string s = j.get<std::string>();
  Integer out;
  if (s.empty() || out.set_str(s, 10) != 0) fail(ErrorKind::Parse, "bad integer '" + s + "'");
  return out;
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(parse_integer(j));
  if (!j.is_string()) fail(ErrorKind::Parse, "expected a rational string");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  const Integer num = parse_integer(s.substr(0, slash));
  Integer den = 1;
  if (slash != std::string::npos) den = parse_integer(s.substr(slash + 1));
  if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

long long grade_of(const AffineMonoid& M, const Vec& e) {
  return M.is_positive() ? M.degree(e) : 0;
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Parse, "cannot write '" + path + "'");
  out << canonical(j);
}

std::string canonical(const json& j) { return j.dump(2) + "\n"; }

json encode(const Ring& R) {
  switch (R.kind()) {
    case RingKind::Integers: return {{"kind", "Z"}};
    case RingKind::Rationals: return {{"kind", "Q"}};
    case RingKind::IntegersMod: return {{"kind", "Z/n"}, {"modulus", R.modulus().get_str()}};
    case RingKind::Excision:
      return {{"kind", "excision"}, {"base", encode(R.base())}, {"ideal", encode(R.ideal())}};
  }
  fail(ErrorKind::Unsupported, "unknown ring kind");
}

Ring decode_ring(const json& j) {
  return guarded([&] {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Z") return Ring::integers();
    if (kind == "Q") return Ring::rationals();
    if (kind == "Z/n") {
      const Integer n = parse_integer(j.at("modulus"));
      if (n < 1) fail(ErrorKind::Parse, "modulus must be positive");
      return Ring::integers_mod(n);
    }
    if (kind == "excision") {
      const Ring base = decode_ring(j.at("base"));
      return Ring::excision(base, decode_ideal(j.at("ideal"), base));
    }
    fail(ErrorKind::Parse, "unknown ring kind '" + kind + "'");
  });
}

json encode(const RingElement& a) {
  switch (a.ring().kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod: return a.integer().get_str();
    case RingKind::Rationals: return a.rational().get_str();
    case RingKind::Excision: return json::array({a.pair().r.get_str(), a.pair().i.get_str()});
  }
  fail(ErrorKind::Unsupported, "unknown ring kind");
}

RingElement decode(const json& j, const Ring& R) {
  switch (R.kind()) {
    case RingKind::Integers:
    case RingKind::IntegersMod: return R.element(parse_integer(j));
    case RingKind::Rationals: return R.element(parse_rational(j));
    case RingKind::Excision:
      if (!j.is_array() || j.size() != 2) fail(ErrorKind::Parse, "excision element is a pair");
      return R.element(parse_integer(j[0]), parse_integer(j[1]));
  }
  fail(ErrorKind::Unsupported, "unknown ring kind");
}

json encode(const Ideal& I) {
  json gens = json::array();
  for (const auto& g : I.generators()) gens.push_back(encode(g));
  return {{"generators", gens}};
}

Ideal decode_ideal(const json& j, const Ring& R) {
  return guarded([&] {
    std::vector<RingElement> gens;
    for (const auto& g : j.at("generators")) gens.push_back(decode(g, R));
    return Ideal::generated_by(R, std::move(gens));
  });
}

json encode(const Vec& v) { return json(v); }

Vec decode_vec(const json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "expected an integer array");
  Vec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) fail(ErrorKind::Parse, "expected an integer array");
    v.push_back(x.get<long long>());
  }
  return v;
}

json encode(const QVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json encode(const SectionPolytope& P) {
  json vertices = json::array();
  for (const auto& v : P.vertices) vertices.push_back(encode(v));
  return {{"functional", encode(P.functional)}, {"level", P.level.get_str()}, {"vertices", vertices}};
}

json encode(const AffineMonoid& M) {
  json gens = json::array();
  for (const auto& g : M.generators()) gens.push_back(encode(g));
  return {{"rank", M.ambient_rank()}, {"generators", gens}};
}

AffineMonoid decode_monoid(const json& j) {
  return guarded([&] {
    const int r = j.at("rank").get<int>();
    std::vector<Vec> gens;
    for (const auto& g : j.at("generators")) {
      gens.push_back(decode_vec(g));
      if (static_cast<int>(gens.back().size()) != r)
        fail(ErrorKind::Parse, "generator length differs from rank");
    }
    return AffineMonoid(r, std::move(gens));
  });
}

json encode(const MonoidRing& A) { return encode_carrier(A); }

json encode(const MonoidRingElement& f) {
  const AffineMonoid& M = f.carrier().monoid;
  std::vector<const MonoidRingElement::Terms::value_type*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::stable_sort(terms.begin(), terms.end(), [&](auto a, auto b) {
    return grade_of(M, a->first) < grade_of(M, b->first);
  });
  json out = json::array();
  for (const auto* t : terms) out.push_back({{"exp", encode(t->first)}, {"coef", encode(t->second)}});
  return out;
}

MonoidRingElement decode(const json& j, const MonoidRing& A) {
  return guarded([&] {
    if (!j.is_array()) fail(ErrorKind::Parse, "monoid-ring element is an array of terms");
    MonoidRingElement::Terms terms;
    for (const auto& t : j) {
      Vec e = decode_vec(t.at("exp"));
      RingElement c = decode(t.at("coef"), A.coeffs);
      if (terms.count(e)) fail(ErrorKind::Parse, "repeated exponent in monoid-ring element");
      terms.emplace(std::move(e), std::move(c));
    }
    return MonoidRingElement(A, std::move(terms));
  });
}

json encode(const FormKind& f) { return {{"kind", to_string(f.kind)}, {"n", f.n}}; }

FormKind decode_form(const json& j) {
  return guarded([&] {
    FormKind f;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "symplectic") f.kind = Form::Symplectic;
    else if (kind == "orthogonal") f.kind = Form::Orthogonal;
    else fail(ErrorKind::Parse, "unknown form '" + kind + "'");
    f.n = j.at("n").get<int>();
    if (f.n < 1) fail(ErrorKind::Parse, "form size must be positive");
    return f;
  });
}

json encode_carrier(const Ring& R) { return {{"ring", encode(R)}}; }

json encode_carrier(const MonoidRing& A) {
  return {{"ring", encode(A.coeffs)}, {"monoid", encode(A.monoid)}};
}

bool is_monoid_carrier(const json& carrier) {
  return carrier.is_object() && carrier.contains("monoid");
}

Ring decode_ring_carrier(const json& carrier) {
  return guarded([&] { return decode_ring(carrier.at("ring")); });
}

MonoidRing decode_monoid_carrier(const json& carrier) {
  return guarded([&] {
    return MonoidRing{decode_ring(carrier.at("ring")), decode_monoid(carrier.at("monoid"))};
  });
}

int decode_index(const json& j, const char* key) {
  return guarded([&] {
    const json& x = j.at(key);
    if (!x.is_number_integer()) fail(ErrorKind::Parse, std::string("index '") + key + "' must be an integer");
    return x.get<int>();
  });
}

}  // namespace umrow::io
