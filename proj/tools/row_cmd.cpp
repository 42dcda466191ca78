#include <iostream>

#include "common.hpp"

namespace umrow::cli {

namespace {

using R = RingElement;
using MR = MonoidRingElement;

template <class E>
UnimodularRow<E> load_row(const json& doc, const typename E::Carrier& c, const RowOptions& o) {
  Row<E> entries = io::decode_row<E>(doc.at("entries"), c);
  require(!entries.empty() && entries.size() % 2 == 0, ErrorKind::Parse,
          "row length must be even and positive");
  FormKind f;
  if (doc.contains("form")) {
    f = io::decode_form(doc.at("form"));
  } else {
    require(!o.form.empty(), ErrorKind::Parse, "row file has no form; pass --form");
  }
  if (!o.form.empty()) f = FormKind{parse_form_kind(o.form), static_cast<int>(entries.size() / 2)};
  UnimodularRow<E> u{f, std::move(entries), {}, {}};
  if (doc.contains("witness")) u.witness = io::decode_row<E>(doc.at("witness"), c);
  const Ring& coeffs = io::coefficient_ring(c);
  if (doc.contains("relative_ideal")) u.relative_ideal = io::decode_ideal(doc.at("relative_ideal"), coeffs);
  if (!o.relative_ideal.empty()) {
    std::vector<RingElement> gens;
    for (const auto& g : split_commas(o.relative_ideal)) gens.push_back(io::decode(json(g), coeffs));
    u.relative_ideal = Ideal::generated_by(coeffs, std::move(gens));
  }
  return u;
}

Ideal nilradical(const Ring& ring) {
  require(ring.kind() == RingKind::IntegersMod, ErrorKind::Unsupported,
          "the default radical ideal needs Z/n; pass --relative-ideal");
  Integer rad = 1;
  for (const auto& [p, e] : factor_modulus(ring.modulus())) rad *= p;
  return Ideal::generated_by(ring, {ring.element(rad)});
}

template <class E>
std::optional<Transcript<E>> search(const UnimodularRow<E>& u, const RowOptions& o) {
  const SearchBudget budget{o.max_expansions, o.max_degree, effective_seed(o.seed)};
  auto result = bounded_orbit_search(u, budget);
  if (result.exhausted())
    std::cout << "search: exhausted after " << result.expansions << " expansions\n";
  return result.transcript;
}

std::optional<Transcript<R>> reduce(const UnimodularRow<R>& u, const RowOptions& o) {
  const std::string& p = o.procedure;
  if (p == "field") return reduce_over_field(u);
  if (p == "semilocal") return reduce_semilocal(u);
  if (p == "pivot") return pivot_reduce(u);
  if (p == "search") return search(u, o);
  if (p == "radical") {
    const Ideal I = u.relative_ideal ? *u.relative_ideal : nilradical(u.entries[0].ring());
    return reduce_mod_radical(u, I);
  }
  require(u.relative_ideal.has_value(), ErrorKind::Precondition,
          "relative reduction needs --relative-ideal");
  return reduce_relative(u);
}

std::optional<Transcript<MR>> reduce(const UnimodularRow<MR>& u, const RowOptions& o) {
  if (o.procedure == "pivot") return pivot_reduce(u);
  if (o.procedure == "search") return search(u, o);
  fail(ErrorKind::Unsupported, "procedure '" + o.procedure + "' needs a coefficient ring, not a monoid ring");
}

template <class E>
int check(const json& doc, const typename E::Carrier& c, const RowOptions& o) {
  const auto u = load_row<E>(doc, c, o);
  json report{{"isotropic", is_isotropic(u.entries, u.form)}};
  std::optional<Row<E>> witness;
  if constexpr (std::is_same_v<E, R>) {
    witness = check_unimodular(u.entries);
    report["unimodular"] = witness.has_value();
  } else {
    witness = check_unimodular(u.entries, o.bound);
    report["unimodular"] = witness ? json(true) : json("unknown");
  }
  if (witness) report["witness"] = io::encode(*witness);
  print_json(report);
  return kOk;
}

template <class E>
int run_reduce(const json& doc, const typename E::Carrier& c, const RowOptions& o) {
  const auto u = load_row<E>(doc, c, o);
  validate_row(u);
  const auto t = reduce(u, o);
  if (!t) return kFail;
  const std::string out = o.out.empty() ? sibling_path(o.path, "transcript") : o.out;
  io::write_file(out, io::encode(*t));
  std::cout << "transcript: " << out << "\n";
  std::cout << "tokens: " << token_count(t->word) << "\n";
  // Re-read the file so the verdict covers what was written.
  const json written = io::read_file(out);
  const auto back = io::decode_transcript<E>(written, c);
  const bool ok = replays(back) && is_e1(back.output);
  std::cout << "replay: " << (ok ? "OK" : "FAIL") << "\n";
  return ok ? kOk : kFail;
}

template <class E>
int replay(const json& doc, const typename E::Carrier& c) {
  const auto t = io::decode_transcript<E>(doc, c);
  bool ok = false;
  std::string why;
  if (static_cast<int>(t.input.size()) != t.form.size() ||
      static_cast<int>(t.output.size()) != t.form.size()) {
    why = "row length differs from 2n";
  } else {
    try {
      ok = act_on_row(t.input, t.word, t.form) == t.output;
      if (!ok) why = "recomputed row differs from the claimed output";
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse) throw;
      why = e.what();
    }
  }
  std::cout << "replay: " << (ok ? "OK" : "FAIL") << (why.empty() ? "" : " (" + why + ")") << "\n";
  std::cout << "output: " << (is_e1(t.output) ? "e1" : "not e1") << "\n";
  bool relative_ok = true;
  if (t.relative_ideal) {
    relative_ok = word_in_relative_subgroup(t.word, *t.relative_ideal);
    if (relative_ok && ok)
      relative_ok = congruent_to_identity(word_matrix(t.word, t.form, c), *t.relative_ideal);
    std::cout << "relative: " << (relative_ok ? "OK" : "FAIL") << "\n";
  }
  return ok && relative_ok ? kOk : kFail;
}

}  // namespace

int row_check(const RowOptions& o) {
  const json doc = io::read_file(o.path);
  const json& carrier = doc.at("carrier");
  if (io::is_monoid_carrier(carrier)) return check<MR>(doc, io::decode_monoid_carrier(carrier), o);
  return check<R>(doc, io::decode_ring_carrier(carrier), o);
}

int row_reduce(const RowOptions& o) {
  const json doc = io::read_file(o.path);
  const json& carrier = doc.at("carrier");
  if (io::is_monoid_carrier(carrier))
    return run_reduce<MR>(doc, io::decode_monoid_carrier(carrier), o);
  return run_reduce<R>(doc, io::decode_ring_carrier(carrier), o);
}

int transcript_replay(const std::string& path) {
  const json doc = io::read_file(path);
  const json& carrier = doc.at("carrier");
  if (io::is_monoid_carrier(carrier)) return replay<MR>(doc, io::decode_monoid_carrier(carrier));
  return replay<R>(doc, io::decode_ring_carrier(carrier));
}

}  // namespace umrow::cli
