#include "umrow/reduction.hpp"

#include <set>

namespace umrow {

namespace {

using R = RingElement;
using MR = MonoidRingElement;

Row<R> reduce_row(const Row<R>& u, const Ring& target) {
  Row<R> out;
  for (const auto& x : u) out.push_back(reduce_representative(x, target));
  return out;
}

Word<R> reduce_word(const Word<R>& w, const Ring& target) {
  return map_word<R, R>(w, [&](const R& x) { return reduce_representative(x, target); });
}

// Parameters lambda over Z/q become the residues x = lambda (mod q),
// x = 0 (mod n/q), so the word acts trivially on every other factor.
Word<R> crt_embed(const Word<R>& w, const Integer& q, const Ring& target) {
  const Integer n = target.modulus();
  if (q == n) return reduce_word(w, target);
  const Integer rest = n / q;
  return map_word<R, R>(w, [&](const R& x) { return target.element(crt(x.integer(), q, Integer(0), rest)); });
}

void require_mod_ring(const Ring& ring, const char* what) {
  require(ring.kind() == RingKind::IntegersMod, ErrorKind::Unsupported,
          std::string(what) + " needs a Z/n carrier");
  require(ring.modulus() >= 2, ErrorKind::Unsupported, std::string(what) + " needs n >= 2");
}

// Recursive radical script on the leading 2k slots of the builder's row.
void radical_script(WordBuilder<R>& b, int k) {
  const Ring ring = b.at(1).ring();
  const R one = ring.one();
  auto inv = ring_inverse(b.at(1));
  require(inv.has_value(), ErrorKind::Precondition, "first entry is not a unit");
  if (k > 2) {
    const int m = 2 * k;
    b.push(ge(1, m, -b.at(m) * *inv));
    b.push(ge(1, m - 1, -b.at(m - 1) * *inv));
    radical_script(b, k - 1);
    return;
  }
  // ge13(lam) sets slot 3 to 1; lam = 1 + eps with eps in I, and
  // ge13(1) core ge13(-1) is the conjugate of the core by ge13(-1).
  const R lam = -(b.at(3) - one) * *inv;
  Row<R> scratch = b.row();
  apply_token(scratch, *ge(1, 3, lam).token, b.form());
  Word<R> core;
  auto step = [&](WordItem<R> item) {
    if (item.token->lam.is_zero()) return;
    apply_token(scratch, *item.token, b.form());
    core.push_back(std::move(item));
  };
  step(ge(2, 4, scratch[0] - one));
  step(ge(1, 4, -scratch[3]));
  b.push(ge(1, 3, lam - one));
  if (!core.empty()) b.append(conj(core, Word<R>{ge(1, 3, -one)}));
  if (!b.at(2).is_zero()) {
    require(b.form().symplectic(), ErrorKind::Precondition, "isotropy violated");
    b.push(se(1, -b.at(2)));
  }
}

}  // namespace

std::vector<Vec> members_up_to_degree(const AffineMonoid& M, long long bound) {
  require(M.is_positive(), ErrorKind::PositivityRequired, "degree enumeration needs a positive monoid");
  std::set<Vec> seen{Vec(M.ambient_rank(), 0)};
  std::vector<Vec> frontier{Vec(M.ambient_rank(), 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& x : frontier)
      for (const auto& g : M.generators()) {
        Vec y = add(x, g);
        if (M.degree(y) > bound) continue;
        if (seen.insert(y).second) next.push_back(y);
      }
    if (seen.size() > 200000) fail(ErrorKind::DeskScaleLimit, "too many monoid elements below the degree bound");
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<RingElement> parameter_pool(const Ring& ring, const SearchBudget&) {
  std::vector<R> out;
  if (ring.kind() == RingKind::IntegersMod) {
    const long n = ring.modulus().get_si();
    for (long k = 1; k < n && k <= 64; ++k) out.push_back(ring.element(k));
  } else {
    for (long k : {1, -1, 2, -2}) out.push_back(ring.element(k));
  }
  return out;
}

std::vector<MonoidRingElement> parameter_pool(const MonoidRing& A, const SearchBudget& budget) {
  auto coeffs = parameter_pool(A.coeffs, budget);
  if (coeffs.size() > 4) coeffs.resize(4);
  std::vector<MR> out;
  for (const auto& e : members_up_to_degree(A.monoid, budget.max_degree))
    for (const auto& c : coeffs) out.push_back(MR::monomial(A, e, c));
  return out;
}

std::vector<RingElement> cancelling_parameters(const R& target, const R& source) {
  if (target.is_zero()) return {};
  if (auto inv = ring_inverse(source)) return {-target * *inv};
  return {};
}

std::vector<MR> cancelling_parameters(const MR& target, const MR& source) {
  std::vector<MR> out;
  const MonoidRing& A = target.carrier();
  for (const auto& [es, cs] : source.terms()) {
    auto inv = ring_inverse(cs);
    if (!inv) continue;
    for (const auto& [et, ct] : target.terms()) {
      Vec d = sub(et, es);
      if (!monoid_membership(A.monoid, d)) continue;
      out.push_back(MR::monomial(A, d, -ct * *inv));
    }
  }
  return out;
}

std::optional<Row<R>> check_unimodular(const Row<R>& u) {
  require(!u.empty(), ErrorKind::SizeMismatch, "empty row");
  const Ring& ring = u[0].ring();
  Row<R> s(u.size(), ring.zero());
  switch (ring.kind()) {
    case RingKind::Integers: {
      Integer g = 0;
      std::vector<Integer> coef(u.size(), 0);
      for (std::size_t k = 0; k < u.size(); ++k) {
        Integer a, b, h;
        mpz_gcdext(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t(),
                   u[k].integer().get_mpz_t());
        for (std::size_t j = 0; j < k; ++j) coef[j] *= a;
        coef[k] = b;
        g = h;
      }
      if (g != 1) return std::nullopt;
      for (std::size_t k = 0; k < u.size(); ++k) s[k] = ring.element(coef[k]);
      return s;
    }
    case RingKind::Rationals:
      for (std::size_t k = 0; k < u.size(); ++k)
        if (!u[k].is_zero()) {
          s[k] = *ring_inverse(u[k]);
          return s;
        }
      return std::nullopt;
    case RingKind::IntegersMod: {
      std::vector<std::vector<Integer>> A(1);
      for (const auto& x : u) A[0].push_back(x.integer());
      auto sol = solve_mod(A, {Integer(1)}, ring.modulus());
      if (!sol) return std::nullopt;
      for (std::size_t k = 0; k < u.size(); ++k) s[k] = ring.element((*sol)[k]);
      return s;
    }
    case RingKind::Excision: break;
  }
  fail(ErrorKind::Unsupported, "witness search over excision rings");
}

std::optional<Row<MR>> check_unimodular(const Row<MR>& u, std::optional<long long> bound) {
  require(!u.empty(), ErrorKind::SizeMismatch, "empty row");
  const MonoidRing& A = u[0].carrier();
  const Ring& coeffs = A.coeffs;
  require(coeffs.kind() == RingKind::Rationals || coeffs.kind() == RingKind::IntegersMod,
          ErrorKind::Unsupported, "witness search needs Q or Z/n coefficients");
  long long top = 0;
  for (const auto& x : u) top = std::max(top, x.support_degree());
  const auto basis = members_up_to_degree(A.monoid, bound.value_or(2 * top));

  std::map<Vec, std::size_t> eq;
  const Vec origin(A.monoid.ambient_rank(), 0);
  eq[origin] = 0;
  struct Entry {
    std::size_t row, col;
    RingElement c;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (const auto& [e, c] : u[i].terms()) {
        auto [it, fresh] = eq.emplace(add(e, basis[b]), eq.size());
        (void)fresh;
        entries.push_back({it->second, i * basis.size() + b, c});
      }
  const std::size_t rows = eq.size(), cols = u.size() * basis.size();
  std::vector<RingElement> sol;
  if (coeffs.kind() == RingKind::Rationals) {
    std::vector<QVec> M(rows, QVec(cols, Rational(0)));
    for (const auto& t : entries) M[t.row][t.col] += t.c.rational();
    QVec rhs(rows, Rational(0));
    rhs[0] = 1;
    auto x = solve(M, rhs);
    if (!x) return std::nullopt;
    for (const auto& v : *x) sol.push_back(coeffs.element(v));
  } else {
    std::vector<std::vector<Integer>> M(rows, std::vector<Integer>(cols, 0));
    for (const auto& t : entries) M[t.row][t.col] += t.c.integer();
    std::vector<Integer> rhs(rows, 0);
    rhs[0] = 1;
    auto x = solve_mod(M, rhs, coeffs.modulus());
    if (!x) return std::nullopt;
    for (const auto& v : *x) sol.push_back(coeffs.element(v));
  }
  Row<MR> s;
  for (std::size_t i = 0; i < u.size(); ++i) {
    MR::Terms terms;
    for (std::size_t b = 0; b < basis.size(); ++b) terms.emplace(basis[b], sol[i * basis.size() + b]);
    s.push_back(MR(A, std::move(terms)));
  }
  return s;
}

Transcript<R> reduce_over_field(const UnimodularRow<R>& u) {
  validate_row(u);
  require(u.entries[0].ring().is_field(), ErrorKind::Unsupported, "carrier is not a field");
  if (is_e1(u.entries)) return make_transcript("field", u, {});
  auto k = first_unit_entry(u.entries);
  require(k.has_value(), ErrorKind::Precondition, "zero row");
  WordBuilder<R> b(u.entries, u.form);
  unit_entry_tail(b, *k);
  return make_transcript("field", u, b.word());
}

Transcript<R> reduce_mod_radical(const UnimodularRow<R>& u, const Ideal& I) {
  validate_row(u);
  const Ring& ring = u.entries[0].ring();
  require(ring.kind() == RingKind::IntegersMod || ring.kind() == RingKind::Excision,
          ErrorKind::Unsupported, "radical reduction needs Z/n or an excision ring over Z/n");
  require(I.ring() == ring, ErrorKind::DescriptorMismatch, "ideal over a different ring");
  for (const auto& g : I.generators())
    require(is_in_jacobson_radical(g), ErrorKind::Precondition,
            "ideal is not inside the Jacobson radical");
  require(ideal_contains(I, u.entries[0] - ring.one()), ErrorKind::Precondition,
          "row is not congruent to e1 modulo the ideal");
  for (std::size_t k = 1; k < u.entries.size(); ++k)
    require(ideal_contains(I, u.entries[k]), ErrorKind::Precondition,
            "row is not congruent to e1 modulo the ideal");
  if (is_e1(u.entries)) return make_transcript("radical", u, {});
  WordBuilder<R> b(u.entries, u.form);
  radical_script(b, u.form.n);
  return make_transcript("radical", u, b.word());
}

Transcript<R> reduce_semilocal(const UnimodularRow<R>& u) {
  validate_row(u);
  const Ring& ring = u.entries[0].ring();
  require_mod_ring(ring, "semilocal reduction");
  Word<R> word;
  for (const auto& [p, e] : factor_modulus(ring.modulus())) {
    Integer q = 1;
    for (int k = 0; k < e; ++k) q *= p;
    const Ring Rq = Ring::integers_mod(q);
    const Ring Fp = Ring::integers_mod(p);
    UnimodularRow<R> up{u.form, reduce_row(u.entries, Fp), {}, {}};
    require(first_unit_entry(up.entries).has_value(), ErrorKind::Precondition,
            "row is not unimodular");
    Word<R> wq = reduce_word(reduce_over_field(up).word, Rq);
    if (e > 1) {
      UnimodularRow<R> rest{u.form, act_on_row(reduce_row(u.entries, Rq), wq, u.form), {}, {}};
      wq = concat(wq, reduce_mod_radical(rest, Ideal::generated_by(Rq, {Rq.element(p)})).word);
    }
    word = concat(word, crt_embed(wq, q, ring));
  }
  return make_transcript("semilocal", u, word);
}

Transcript<R> reduce_relative(const UnimodularRow<R>& u) {
  require(u.relative_ideal.has_value(), ErrorKind::Precondition, "no relative ideal given");
  validate_row(u);
  const Ring& ring = u.entries[0].ring();
  require_mod_ring(ring, "relative reduction");
  const Ideal& I = *u.relative_ideal;
  require(I.ring() == ring, ErrorKind::DescriptorMismatch, "ideal over a different ring");
  Word<R> word;
  for (const auto& [p, e] : factor_modulus(ring.modulus())) {
    Integer q = 1;
    for (int k = 0; k < e; ++k) q *= p;
    Integer d;
    mpz_gcd(d.get_mpz_t(), I.divisor().get_mpz_t(), q.get_mpz_t());
    if (d == q) continue;  // I vanishes here, so the row is already e_1
    const Ring Rq = Ring::integers_mod(q);
    const Row<R> uq = reduce_row(u.entries, Rq);
    Word<R> wq;
    if (d == 1) {
      wq = reduce_semilocal({u.form, uq, {}, {}}).word;
    } else {
      // Excision ring Rq (+) (d): the row becomes ((1, v1 - 1), (0, v2), ...).
      const Ideal Iq = Ideal::generated_by(Rq, {Rq.element(d)});
      const Ring X = Ring::excision(Rq, Iq);
      Row<R> lifted;
      lifted.push_back(X.element(Integer(1), (uq[0] - Rq.one()).integer()));
      for (std::size_t k = 1; k < uq.size(); ++k) lifted.push_back(X.element(Integer(0), uq[k].integer()));
      const Ideal J = Ideal::generated_by(X, {X.element(Integer(0), d)});
      auto tx = reduce_mod_radical({u.form, lifted, {}, J}, J);
      require(replays_to_e1(tx), ErrorKind::Precondition, "excision reduction failed");
      wq = map_word<R, R>(tx.word, [](const R& x) { return excision_project(x); });
    }
    word = concat(word, crt_embed(wq, q, ring));
  }
  return make_transcript("relative", u, word);
}

MonicResult monic_then_reduce(const UnimodularRow<MR>& u, const DegreeAssignment& d, unsigned c,
                              unsigned c_max) {
  validate_row(u);
  const MonoidRing& A = u.entries[0].carrier();
  require(is_polynomial_ring(A), ErrorKind::Unsupported, "the twist needs a polynomial ring");
  require(A.coeffs.kind() == RingKind::IntegersMod || A.coeffs.kind() == RingKind::Rationals,
          ErrorKind::Unsupported, "the twist needs field or Z/n coefficients");
  Row<MR> restricted;
  for (const auto& x : u.entries) restricted.push_back(evaluate_at_t1_zero(x));
  require(check_unimodular(restricted).has_value(), ErrorKind::Precondition,
          "row restricted to t1 = 0 is not unimodular");
  Vec t1(A.monoid.ambient_rank(), 0);
  t1[0] = 1;
  MonicResult out;
  for (unsigned cc = std::max(c, 1u); cc <= c_max; cc *= 2) {
    out.c = cc;
    out.twisted.clear();
    for (const auto& x : u.entries) out.twisted.push_back(nagata_twist(x, cc));
    out.monic = is_monic_in(out.twisted.back(), t1, d);
    if (out.monic) break;
  }
  if (out.monic && first_unit_entry(out.twisted))
    out.continuation = reduce_from_unit_entry(UnimodularRow<MR>{u.form, out.twisted, {}, {}});
  return out;
}

MonicResult monic_then_reduce(const UnimodularRow<MR>& u, const PyramidalDecomposition& pd,
                              unsigned c, unsigned c_max) {
  return monic_then_reduce(u, DegreeAssignment{pd.degree_functional}, c, c_max);
}

}  // namespace umrow
