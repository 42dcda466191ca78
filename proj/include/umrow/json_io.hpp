#pragma once

// Canonical JSON for rings, monoids, elements, words, rows, matrices and
// transcripts. Integers are decimal strings, rationals "p/q", excision pairs
// ["r", "i"]. Objects are key-sorted, so dump() output is canonical.

#include <json.hpp>

#include <optional>
#include <string>

#include "umrow/reduction.hpp"

namespace umrow::io {

using json = nlohmann::json;

json parse_text(const std::string& text);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& j);
std::string canonical(const json& j);

json encode(const Ring& R);
Ring decode_ring(const json& j);

json encode(const RingElement& a);
RingElement decode(const json& j, const Ring& R);

json encode(const Ideal& I);
Ideal decode_ideal(const json& j, const Ring& R);

json encode(const AffineMonoid& M);
AffineMonoid decode_monoid(const json& j);

json encode(const MonoidRing& A);
// Terms sorted by (grade, lex exponent).
json encode(const MonoidRingElement& f);
MonoidRingElement decode(const json& j, const MonoidRing& A);

json encode(const FormKind& f);
FormKind decode_form(const json& j);

json encode(const Vec& v);
Vec decode_vec(const json& j);

// Exact fractions "p/q"; polytopes as {"functional", "level", "vertices"}.
json encode(const QVec& v);
json encode(const SectionPolytope& P);

// Carrier descriptors: {"ring": ...} or {"ring": ..., "monoid": ...}.
json encode_carrier(const Ring& R);
json encode_carrier(const MonoidRing& A);
bool is_monoid_carrier(const json& carrier);
Ring decode_ring_carrier(const json& carrier);
MonoidRing decode_monoid_carrier(const json& carrier);

inline const Ring& coefficient_ring(const Ring& R) { return R; }
inline const Ring& coefficient_ring(const MonoidRing& A) { return A.coeffs; }

template <class E>
json encode(const Row<E>& u) {
  json out = json::array();
  for (const auto& x : u) out.push_back(encode(x));
  return out;
}

template <class E>
Row<E> decode_row(const json& j, const typename E::Carrier& c) {
  if (!j.is_array()) fail(ErrorKind::Parse, "row must be an array");
  Row<E> out;
  for (const auto& x : j) out.push_back(decode(x, c));
  return out;
}

template <class E>
json encode(const Matrix<E>& a) {
  json out = json::array();
  for (const auto& row : a) out.push_back(encode(row));
  return out;
}

template <class E>
Matrix<E> decode_matrix(const json& j, const typename E::Carrier& c) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::Parse, "matrix must be a nonempty array");
  Matrix<E> out;
  for (const auto& row : j) {
    out.push_back(decode_row<E>(row, c));
    if (out.back().size() != j.size()) fail(ErrorKind::Parse, "matrix must be square");
  }
  return out;
}

template <class E>
json encode(const Word<E>& w) {
  json out = json::array();
  for (const auto& item : w) {
    if (item.is_conj()) {
      out.push_back({{"op", "conj"}, {"core", encode(item.core)}, {"by", encode(item.by)}});
    } else if (item.token->kind == Token<E>::Kind::SE) {
      out.push_back({{"op", "se"}, {"i", item.token->i}, {"lam", encode(item.token->lam)}});
    } else {
      out.push_back({{"op", "ge"},
                     {"i", item.token->i},
                     {"j", item.token->j},
                     {"lam", encode(item.token->lam)}});
    }
  }
  return out;
}

int decode_index(const json& j, const char* key);

template <class E>
Word<E> decode_word(const json& j, const typename E::Carrier& c) {
  if (!j.is_array()) fail(ErrorKind::Parse, "word must be an array");
  Word<E> w;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("op")) fail(ErrorKind::Parse, "word item needs an op");
    const std::string op = item.at("op").get<std::string>();
    if (op == "ge") {
      w.push_back(ge(decode_index(item, "i"), decode_index(item, "j"), decode(item.at("lam"), c)));
    } else if (op == "se") {
      w.push_back(se(decode_index(item, "i"), decode(item.at("lam"), c)));
    } else if (op == "conj") {
      WordItem<E> x;
      x.core = decode_word<E>(item.at("core"), c);
      x.by = decode_word<E>(item.at("by"), c);
      w.push_back(std::move(x));
    } else {
      fail(ErrorKind::Parse, "unknown word op '" + op + "'");
    }
  }
  return w;
}

template <class E>
json encode(const UnimodularRow<E>& u) {
  json out{{"form", encode(u.form)},
           {"carrier", encode_carrier(u.entries.at(0).carrier())},
           {"entries", encode(u.entries)}};
  if (u.witness) out["witness"] = encode(*u.witness);
  if (u.relative_ideal) out["relative_ideal"] = encode(*u.relative_ideal);
  return out;
}

template <class E>
UnimodularRow<E> decode_unimodular_row(const json& j, const typename E::Carrier& c) {
  UnimodularRow<E> u{decode_form(j.at("form")), decode_row<E>(j.at("entries"), c), {}, {}};
  if (j.contains("witness")) u.witness = decode_row<E>(j.at("witness"), c);
  if (j.contains("relative_ideal"))
    u.relative_ideal = decode_ideal(j.at("relative_ideal"), coefficient_ring(c));
  return u;
}

template <class E>
json encode(const Transcript<E>& t) {
  json out{{"procedure", t.procedure},
           {"form", encode(t.form)},
           {"carrier", encode_carrier(t.input.at(0).carrier())},
           {"input", encode(t.input)},
           {"word", encode(t.word)},
           {"output", encode(t.output)}};
  out["relative_ideal"] = t.relative_ideal ? encode(*t.relative_ideal) : json(nullptr);
  return out;
}

template <class E>
Transcript<E> decode_transcript(const json& j, const typename E::Carrier& c) {
  Transcript<E> t;
  t.procedure = j.at("procedure").get<std::string>();
  t.form = decode_form(j.at("form"));
  t.input = decode_row<E>(j.at("input"), c);
  t.word = decode_word<E>(j.at("word"), c);
  t.output = decode_row<E>(j.at("output"), c);
  if (j.contains("relative_ideal") && !j.at("relative_ideal").is_null())
    t.relative_ideal = decode_ideal(j.at("relative_ideal"), coefficient_ring(c));
  return t;
}

// Runs fn under a translation of JSON library exceptions into Parse errors.
template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, e.what());
  }
}

}  // namespace umrow::io
