#pragma once

// Unimodular rows and the procedures that move them to e_1 by elementary
// words. Every procedure returns a transcript; callers trust a transcript
// only after replaying it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "umrow/classical_groups.hpp"
#include "umrow/monoid_ring.hpp"

namespace umrow {

template <class E>
struct UnimodularRow {
  FormKind form;
  Row<E> entries;
  std::optional<Row<E>> witness;
  std::optional<Ideal> relative_ideal;
};

template <class E>
struct Transcript {
  std::string procedure;
  FormKind form;
  Row<E> input;
  Word<E> word;
  Row<E> output;
  std::optional<Ideal> relative_ideal;
};

inline std::optional<RingElement> unit_inverse(const RingElement& a) { return ring_inverse(a); }
inline std::optional<MonoidRingElement> unit_inverse(const MonoidRingElement& a) {
  return inverse(a);
}

template <class E>
E dot_row(const Row<E>& u, const Row<E>& s) {
  E acc = E::zero(u[0].carrier());
  for (std::size_t k = 0; k < u.size(); ++k) acc = acc + u[k] * s[k];
  return acc;
}

template <class E>
bool is_e1(const Row<E>& u) {
  if (u.empty() || !u[0].is_one()) return false;
  for (std::size_t k = 1; k < u.size(); ++k)
    if (!u[k].is_zero()) return false;
  return true;
}

template <class E>
bool is_isotropic(const Row<E>& u, const FormKind& f) {
  return f.symplectic() || quadratic_value(u).is_zero();
}

template <class E>
void validate_row(const UnimodularRow<E>& u) {
  require(static_cast<int>(u.entries.size()) == u.form.size(), ErrorKind::SizeMismatch,
          "row length differs from 2n");
  require(u.form.n >= 2, ErrorKind::Precondition, "rows need 2n >= 4");
  const auto& c = u.entries[0].carrier();
  for (const auto& x : u.entries)
    require(x.carrier() == c, ErrorKind::DescriptorMismatch, "row entries over different carriers");
  if (u.witness) {
    require(u.witness->size() == u.entries.size(), ErrorKind::SizeMismatch,
            "witness length differs from the row");
    require(dot_row(u.entries, *u.witness).is_one(), ErrorKind::Precondition,
            "witness dot product is not 1");
  }
  if (u.relative_ideal) {
    auto dev = u.entries;
    dev[0] = dev[0] - E::one(c);
    for (const auto& x : dev)
      require(ideal_contains(*u.relative_ideal, x), ErrorKind::Precondition,
              "row is not congruent to e1 modulo the relative ideal");
  }
  require(is_isotropic(u.entries, u.form), ErrorKind::Precondition, "isotropy violated");
}

template <class E>
bool replays(const Transcript<E>& t) {
  return act_on_row(t.input, t.word, t.form) == t.output;
}

template <class E>
bool replays_to_e1(const Transcript<E>& t) {
  return replays(t) && is_e1(t.output);
}

// Applies tokens one at a time, keeping the running row; zero-parameter
// tokens are dropped so e_1 always gives the empty word.
template <class E>
class WordBuilder {
 public:
  WordBuilder(Row<E> row, FormKind form) : row_(std::move(row)), form_(form) {}

  void push(WordItem<E> item) {
    if (!item.is_conj()) {
      if (item.token->lam.is_zero()) return;
      validate_token(*item.token, form_);
      apply_token(row_, *item.token, form_);
    } else {
      row_ = act_on_row(row_, Word<E>{item}, form_);
    }
    word_.push_back(std::move(item));
  }
  void append(const Word<E>& w) {
    for (const auto& item : w) push(item);
  }

  const Row<E>& row() const { return row_; }
  const E& at(int k) const { return row_[k - 1]; }
  const Word<E>& word() const { return word_; }
  const FormKind& form() const { return form_; }

 private:
  Row<E> row_;
  FormKind form_;
  Word<E> word_;
};

template <class E>
Transcript<E> make_transcript(const std::string& procedure, const UnimodularRow<E>& u,
                              Word<E> word) {
  Transcript<E> t{procedure, u.form, u.entries, std::move(word), {}, u.relative_ideal};
  t.output = act_on_row(t.input, t.word, t.form);
  return t;
}

// u_1 a unit: normalise u_1 to 1, clear slots 3..2n against it, then clear
// slot 2 with the long-root token (symplectic) or by isotropy (orthogonal).
template <class E>
void pivot_tail(WordBuilder<E>& b) {
  const FormKind f = b.form();
  const int m = f.size();
  const auto c = b.at(1).carrier();
  const E one = E::one(c);
  auto inv = unit_inverse(b.at(1));
  require(inv.has_value(), ErrorKind::Precondition, "pivot entry is not a unit");
  if (!b.at(1).is_one()) {
    b.push(ge(1, 3, (one - b.at(3)) * *inv));
    b.push(ge(3, 1, one - b.at(1)));
  }
  for (int j = 3; j <= m; ++j)
    if (!b.at(j).is_zero()) b.push(ge(1, j, -b.at(j)));
  if (!b.at(2).is_zero()) {
    require(f.symplectic(), ErrorKind::Precondition, "isotropy violated");
    b.push(se(1, -b.at(2)));
  }
}

template <class E>
Transcript<E> pivot_reduce(const UnimodularRow<E>& u) {
  validate_row(u);
  require(unit_inverse(u.entries[0]).has_value(), ErrorKind::Precondition,
          "first entry is not a unit");
  WordBuilder<E> b(u.entries, u.form);
  pivot_tail(b);
  return make_transcript("pivot", u, b.word());
}

// Moves the unit at slot k into slot 1 (as the value 1), then pivots.
template <class E>
void unit_entry_tail(WordBuilder<E>& b, int k) {
  const auto c = b.at(1).carrier();
  const E one = E::one(c);
  if (k == 2) {
    auto inv = unit_inverse(b.at(2));
    require(inv.has_value(), ErrorKind::Precondition, "entry is not a unit");
    if (b.form().symplectic()) {
      b.push(se(2, (one - b.at(1)) * *inv));
      pivot_tail(b);
      return;
    }
    b.push(ge(2, 3, (one - b.at(3)) * *inv));
    k = 3;
  }
  if (k != 1) {
    auto inv = unit_inverse(b.at(k));
    require(inv.has_value(), ErrorKind::Precondition, "entry is not a unit");
    b.push(ge(k, 1, (one - b.at(1)) * *inv));
  }
  pivot_tail(b);
}

template <class E>
std::optional<int> first_unit_entry(const Row<E>& u) {
  for (std::size_t k = 0; k < u.size(); ++k)
    if (!u[k].is_zero() && unit_inverse(u[k])) return static_cast<int>(k) + 1;
  return std::nullopt;
}

template <class E>
Transcript<E> reduce_from_unit_entry(const UnimodularRow<E>& u) {
  validate_row(u);
  if (is_e1(u.entries)) return make_transcript("unit-entry", u, {});
  auto k = first_unit_entry(u.entries);
  require(k.has_value(), ErrorKind::Precondition, "no entry is a unit");
  WordBuilder<E> b(u.entries, u.form);
  unit_entry_tail(b, *k);
  return make_transcript("unit-entry", u, b.word());
}

template <class E, class F, class Chooser>
Word<F> lift_word(const Word<E>& w, Chooser&& choose) {
  return map_word<E, F>(w, std::forward<Chooser>(choose));
}

// ---- descent ---------------------------------------------------------

template <class E>
struct Descent {
  Word<E> epsilon;
  Matrix<E> beta;
};

// alpha = word_matrix(epsilon) * (beta (+) Id_2), beta in the group of size
// 2n - 2. Rows and columns 2n-1, 2n of alpha are forced by the form once the
// last column is e_2n.
template <class E>
Descent<E> stabilization_descent(const Matrix<E>& alpha, const FormKind& f) {
  const int m = f.size();
  require(f.n >= 2, ErrorKind::Precondition, "descent needs 2n >= 4");
  require(static_cast<int>(alpha.size()) == m, ErrorKind::SizeMismatch,
          "matrix size differs from 2n");
  const auto& c = alpha[0][0].carrier();
  for (int k = 0; k < m; ++k) {
    const E want = k == m - 1 ? E::one(c) : E::zero(c);
    require(alpha[k][m - 1] == want, ErrorKind::Precondition, "last column is not e_2n");
  }
  require(is_in_group(alpha, f), ErrorKind::Precondition, "matrix is not in the group");

  const FormKind small{f.kind, f.n - 1};
  Matrix<E> a(m - 2, std::vector<E>(m - 2, E::zero(c)));
  for (int i = 0; i < m - 2; ++i)
    for (int j = 0; j < m - 2; ++j) a[i][j] = alpha[i][j];
  // a^{-1} = F^{-1} a^T F with F^{-1} = -F (symplectic) or F (orthogonal).
  auto F = standard_form<E>(small, c);
  auto Finv = F;
  if (f.symplectic())
    for (auto& row : Finv)
      for (auto& x : row) x = -x;
  auto ainv = matmul(matmul(Finv, transpose(a)), F);
  auto u = matmul(alpha, block_sum_identity2(ainv, c));

  Word<E> eps;
  for (int i = 1; i <= m - 2; ++i)
    if (!u[i - 1][m - 2].is_zero()) eps.push_back(ge(i, m - 1, u[i - 1][m - 2]));
  auto rest = matmul(word_matrix(inverse_word(eps), f, c), u);
  const E z = rest[m - 1][m - 2];
  if (!z.is_zero()) {
    require(f.symplectic(), ErrorKind::Precondition, "matrix is not in the group");
    eps.push_back(se(m, z));
  }
  Descent<E> out{eps, a};
  require(matmul(word_matrix(eps, f, c), block_sum_identity2(a, c)) == alpha,
          ErrorKind::Precondition, "descent reconstruction failed");
  return out;
}

// ---- bounded orbit search --------------------------------------------

// Pool parameters are coefficients times monomials of degree <= max_degree;
// cancellation moves supply the other monomials.
struct SearchBudget {
  int max_expansions = 1500;
  long long max_degree = 0;
  std::uint64_t seed = 0;
};

template <class E>
struct SearchResult {
  std::optional<Transcript<E>> transcript;
  int expansions = 0;
  bool exhausted() const { return !transcript.has_value(); }
};

std::vector<RingElement> parameter_pool(const Ring& R, const SearchBudget& budget);
std::vector<MonoidRingElement> parameter_pool(const MonoidRing& R, const SearchBudget& budget);

// Parameters lam such that target + lam * source loses a term of target.
std::vector<RingElement> cancelling_parameters(const RingElement& target, const RingElement& source);
std::vector<MonoidRingElement> cancelling_parameters(const MonoidRingElement& target,
                                                     const MonoidRingElement& source);

inline long long entry_weight(const RingElement& a) {
  if (a.is_zero()) return 0;
  return is_unit(a) ? 1 : 2;
}

inline long long entry_weight(const MonoidRingElement& a) {
  long long w = 0;
  for (const auto& [e, coef] : a.terms()) w += 1 + a.carrier().monoid.degree(e);
  return w;
}

// Ordering key for "closest to a unit": degree first, then term count.
inline long long entry_rank(const RingElement& a) { return entry_weight(a); }
inline long long entry_rank(const MonoidRingElement& a) {
  return a.is_zero() ? 0 : 64 * a.support_degree() + static_cast<long long>(a.terms().size());
}

// Best-first search over single-token moves: term cancellations between
// entries plus pool parameters. As soon as some entry is a unit the row is
// finished deterministically.
template <class E>
SearchResult<E> bounded_orbit_search(const UnimodularRow<E>& u, const SearchBudget& budget) {
  validate_row(u);
  SearchResult<E> result;
  const FormKind f = u.form;
  const int m = f.size();
  const auto pool = parameter_pool(u.entries[0].carrier(), budget);

  std::vector<WordItem<E>> moves;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i != j && sigma(i) != j)
        for (const auto& lam : pool) moves.push_back(ge(i, j, lam));
  if (f.symplectic())
    for (int i = 1; i <= m; ++i)
      for (const auto& lam : pool) moves.push_back(se(i, lam));
  std::mt19937_64 rng(budget.seed);
  std::shuffle(moves.begin(), moves.end(), rng);

  auto key = [](const Row<E>& r) {
    std::string s;
    for (const auto& x : r) s += x.to_string() + "|";
    return s;
  };
  // Smallest nonzero entry first, total size second.
  auto score = [](const Row<E>& r) {
    long long total = 0, least = -1;
    for (const auto& x : r) {
      total += entry_weight(x);
      const long long w = entry_rank(x);
      if (w > 0 && (least < 0 || w < least)) least = w;
    }
    return least * 4096 + total;
  };

  struct Node {
    Row<E> row;
    Word<E> word;
  };
  std::vector<Node> nodes;
  using Entry = std::pair<long long, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  std::unordered_set<std::string> seen;

  nodes.push_back({u.entries, {}});
  open.push({score(u.entries), 0});
  seen.insert(key(u.entries));
  while (!open.empty() && result.expansions < budget.max_expansions) {
    const std::size_t id = open.top().second;
    open.pop();
    if (first_unit_entry(nodes[id].row)) {
      WordBuilder<E> b(nodes[id].row, f);
      unit_entry_tail(b, *first_unit_entry(nodes[id].row));
      result.transcript = make_transcript("search", u, concat(nodes[id].word, b.word()));
      return result;
    }
    ++result.expansions;
    const Row<E> here = nodes[id].row;
    std::vector<WordItem<E>> local;
    for (int i = 1; i <= m; ++i) {
      if (here[i - 1].is_zero()) continue;
      for (int j = 1; j <= m; ++j) {
        if (j == i || (j == sigma(i) && !f.symplectic())) continue;
        for (auto& lam : cancelling_parameters(here[j - 1], here[i - 1]))
          local.push_back(j == sigma(i) ? se(i, std::move(lam)) : ge(i, j, std::move(lam)));
      }
    }
    local.insert(local.end(), moves.begin(), moves.end());
    for (const auto& mv : local) {
      Row<E> next = here;
      apply_token(next, *mv.token, f);
      if (!seen.insert(key(next)).second) continue;
      Word<E> w = nodes[id].word;
      w.push_back(mv);
      nodes.push_back({std::move(next), std::move(w)});
      open.push({score(nodes.back().row), nodes.size() - 1});
    }
  }
  return result;
}

// ---- procedures over coefficient rings ---------------------------------

// Witness search. Over Z, Q and Z/n this is exact; over monoid rings it looks
// for a witness of support degree <= bound (default: twice the row's) and
// nullopt does not certify non-unimodularity.
std::optional<Row<RingElement>> check_unimodular(const Row<RingElement>& u);
std::optional<Row<MonoidRingElement>> check_unimodular(const Row<MonoidRingElement>& u,
                                                       std::optional<long long> bound = {});

Transcript<RingElement> reduce_over_field(const UnimodularRow<RingElement>& u);
// Entries congruent to e_1 modulo I, with I inside the Jacobson radical.
Transcript<RingElement> reduce_mod_radical(const UnimodularRow<RingElement>& u, const Ideal& I);
Transcript<RingElement> reduce_semilocal(const UnimodularRow<RingElement>& u);
Transcript<RingElement> reduce_relative(const UnimodularRow<RingElement>& u);

struct MonicResult {
  Row<MonoidRingElement> twisted;
  unsigned c = 0;
  bool monic = false;
  // Present when some twisted entry is a unit; reduces the twisted row.
  std::optional<Transcript<MonoidRingElement>> continuation;
};

// Nagata twist with exponent c, doubled up to c_max until the last entry is
// monic in t_1 under d.
MonicResult monic_then_reduce(const UnimodularRow<MonoidRingElement>& u,
                              const DegreeAssignment& d, unsigned c, unsigned c_max = 64);
MonicResult monic_then_reduce(const UnimodularRow<MonoidRingElement>& u,
                              const PyramidalDecomposition& pd, unsigned c,
                              unsigned c_max = 64);

// Elements of M of grading degree at most `bound`, in lex order.
std::vector<Vec> members_up_to_degree(const AffineMonoid& M, long long bound);

}  // namespace umrow
