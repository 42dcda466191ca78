#pragma once

// Symplectic and orthogonal forms on R^{2n}, elementary generators as tokens,
// words of tokens and conjugates, and their action on rows.
//
// Indices are 1-based everywhere in this interface. sigma = (1 2)(3 4)...
//
// The element type E is RingElement or MonoidRingElement; both expose
// E::Carrier, E::zero(c), E::one(c), e.carrier(), ring operators, is_zero().

#include <optional>
#include <string>
#include <vector>

#include "umrow/coeff_rings.hpp"
#include "umrow/monoid_ring.hpp"

namespace umrow {

enum class Form { Symplectic, Orthogonal };

struct FormKind {
  Form kind = Form::Symplectic;
  int n = 2;  // matrices are 2n x 2n
  int size() const { return 2 * n; }
  bool symplectic() const { return kind == Form::Symplectic; }
  friend bool operator==(const FormKind&, const FormKind&) = default;
};

const char* to_string(Form f);

inline int sigma(int i) { return i % 2 == 1 ? i + 1 : i - 1; }

template <class E>
using Row = std::vector<E>;
template <class E>
using Matrix = std::vector<std::vector<E>>;

template <class E>
struct Token {
  enum class Kind { GE, SE };
  Kind kind = Kind::GE;
  int i = 1;
  int j = 0;  // unused for SE
  E lam;
};

template <class E>
struct WordItem {
  std::optional<Token<E>> token;   // set for plain tokens
  std::vector<WordItem<E>> core;   // conjugates: by^{-1} core by
  std::vector<WordItem<E>> by;
  bool is_conj() const { return !token.has_value(); }
};

template <class E>
using Word = std::vector<WordItem<E>>;

template <class E>
WordItem<E> ge(int i, int j, E lam) {
  return {Token<E>{Token<E>::Kind::GE, i, j, std::move(lam)}, {}, {}};
}

template <class E>
WordItem<E> se(int i, E lam) {
  return {Token<E>{Token<E>::Kind::SE, i, 0, std::move(lam)}, {}, {}};
}

template <class E>
void validate_token(const Token<E>& t, const FormKind& f) {
  const int m = f.size();
  if (t.kind == Token<E>::Kind::SE) {
    require(f.symplectic(), ErrorKind::InvalidToken,
            "the orthogonal group has no i = sigma(j) generators");
    require(t.i >= 1 && t.i <= m, ErrorKind::InvalidToken, "token index out of range");
    return;
  }
  require(t.i >= 1 && t.i <= m && t.j >= 1 && t.j <= m, ErrorKind::InvalidToken,
          "token index out of range");
  require(t.i != t.j, ErrorKind::InvalidToken, "token needs i != j");
  require(sigma(t.i) != t.j, ErrorKind::InvalidToken, "token needs sigma(i) != j");
}

// Coefficient of e_{sigma(j) sigma(i)} in ge_ij(lam).
template <class E>
E paired_coefficient(const Token<E>& t, const FormKind& f) {
  if (f.symplectic() && (t.i + t.j) % 2 == 1) return t.lam;
  return -t.lam;
}

// Plain tokens only; conjugates expanded as by^{-1} core by.
template <class E>
Word<E> inverse_word(const Word<E>& w);

template <class E>
void expand_into(const Word<E>& w, std::vector<Token<E>>& out) {
  for (const auto& item : w) {
    if (!item.is_conj()) {
      out.push_back(*item.token);
      continue;
    }
    expand_into(inverse_word(item.by), out);
    expand_into(item.core, out);
    expand_into(item.by, out);
  }
}

template <class E>
std::vector<Token<E>> expand(const Word<E>& w) {
  std::vector<Token<E>> out;
  expand_into(w, out);
  return out;
}

template <class E>
Word<E> inverse_word(const Word<E>& w) {
  Word<E> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (it->is_conj()) {
      out.push_back({std::nullopt, inverse_word(it->core), it->by});
    } else {
      Token<E> t = *it->token;
      t.lam = -t.lam;
      out.push_back({t, {}, {}});
    }
  }
  return out;
}

template <class E>
Word<E> plain_word(const Word<E>& w) {
  Word<E> out;
  for (auto& t : expand(w)) out.push_back({t, {}, {}});
  return out;
}

// Conjugate by^{-1} core by, kept at depth one: nested conjugates in the core
// are absorbed (Conj(Conj(c, h), g) = Conj(c, h g)) and the conjugating word
// is expanded to plain tokens.
template <class E>
Word<E> conj(const Word<E>& core, const Word<E>& by) {
  Word<E> by_plain = plain_word(by);
  Word<E> out;
  Word<E> run;
  auto flush = [&] {
    if (!run.empty()) out.push_back({std::nullopt, std::move(run), by_plain});
    run.clear();
  };
  for (const auto& item : core) {
    if (!item.is_conj()) {
      run.push_back(item);
      continue;
    }
    flush();
    Word<E> by2 = item.by;
    by2.insert(by2.end(), by_plain.begin(), by_plain.end());
    out.push_back({std::nullopt, item.core, by2});
  }
  flush();
  return out;
}

template <class E>
Word<E> concat(Word<E> a, const Word<E>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

template <class E>
std::size_t token_count(const Word<E>& w) {
  return expand(w).size();
}

template <class E>
int conjugation_depth(const Word<E>& w) {
  int d = 0;
  for (const auto& item : w) {
    if (item.is_conj()) {
      d = std::max(d, 1 + std::max(conjugation_depth(item.core), conjugation_depth(item.by)));
    }
  }
  return d;
}

template <class E, class F, class Fn>
Word<F> map_word(const Word<E>& w, Fn&& fn) {
  Word<F> out;
  for (const auto& item : w) {
    if (item.is_conj()) {
      out.push_back({std::nullopt, map_word<E, F>(item.core, fn), map_word<E, F>(item.by, fn)});
    } else {
      const auto& t = *item.token;
      out.push_back({Token<F>{static_cast<typename Token<F>::Kind>(t.kind), t.i, t.j, fn(t.lam)},
                     {},
                     {}});
    }
  }
  return out;
}

template <class E>
void validate_word(const Word<E>& w, const FormKind& f) {
  for (const auto& t : expand(w)) validate_token(t, f);
}

// ---------------------------------------------------------------- matrices

template <class E>
Matrix<E> identity_matrix(int m, const typename E::Carrier& c) {
  Matrix<E> a(m, std::vector<E>(m, E::zero(c)));
  for (int k = 0; k < m; ++k) a[k][k] = E::one(c);
  return a;
}

template <class E>
Matrix<E> matmul(const Matrix<E>& a, const Matrix<E>& b) {
  require(!a.empty() && a.front().size() == b.size(), ErrorKind::SizeMismatch,
          "matrix product size mismatch");
  const auto& c = a[0][0].carrier();
  Matrix<E> out(a.size(), std::vector<E>(b.front().size(), E::zero(c)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b.front().size(); ++j) {
        if (!b[k][j].is_zero()) out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  return out;
}

template <class E>
Matrix<E> transpose(const Matrix<E>& a) {
  Matrix<E> out(a.front().size(), std::vector<E>(a.size(), a[0][0]));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.front().size(); ++j) out[j][i] = a[i][j];
  return out;
}

template <class E>
Matrix<E> standard_form(const FormKind& f, const typename E::Carrier& c) {
  Matrix<E> F(f.size(), std::vector<E>(f.size(), E::zero(c)));
  for (int k = 0; k < f.n; ++k) {
    F[2 * k][2 * k + 1] = E::one(c);
    F[2 * k + 1][2 * k] = f.symplectic() ? -E::one(c) : E::one(c);
  }
  return F;
}

template <class E>
E inner_product(const Row<E>& u, const Row<E>& v, const FormKind& f) {
  require(static_cast<int>(u.size()) == f.size() && static_cast<int>(v.size()) == f.size(),
          ErrorKind::SizeMismatch, "row length differs from 2n");
  E s = E::zero(u[0].carrier());
  const E sign = f.symplectic() ? -E::one(u[0].carrier()) : E::one(u[0].carrier());
  for (int k = 0; k < f.n; ++k) {
    s = s + u[2 * k] * v[2 * k + 1] + sign * u[2 * k + 1] * v[2 * k];
  }
  return s;
}

// q(v) = sum v_{2k-1} v_{2k}, the quadratic form with polar form <., .>.
template <class E>
E quadratic_value(const Row<E>& u) {
  E s = E::zero(u[0].carrier());
  for (std::size_t k = 0; k + 1 < u.size(); k += 2) s = s + u[k] * u[k + 1];
  return s;
}

template <class E>
bool is_in_group(const Matrix<E>& a, const FormKind& f) {
  if (static_cast<int>(a.size()) != f.size()) return false;
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != f.size()) return false;
  const auto F = standard_form<E>(f, a[0][0].carrier());
  return matmul(matmul(transpose(a), F), a) == F;
}

template <class E>
Matrix<E> token_matrix(const Token<E>& t, const FormKind& f) {
  validate_token(t, f);
  auto a = identity_matrix<E>(f.size(), t.lam.carrier());
  if (t.kind == Token<E>::Kind::SE) {
    a[t.i - 1][sigma(t.i) - 1] = t.lam;
    return a;
  }
  a[t.i - 1][t.j - 1] = t.lam;
  a[sigma(t.j) - 1][sigma(t.i) - 1] = paired_coefficient(t, f);
  return a;
}

// In-place u <- u * token_matrix(t).
template <class E>
void apply_token(Row<E>& u, const Token<E>& t, const FormKind& f) {
  if (t.lam.is_zero()) return;
  if (t.kind == Token<E>::Kind::SE) {
    u[sigma(t.i) - 1] = u[sigma(t.i) - 1] + t.lam * u[t.i - 1];
    return;
  }
  const E a = t.lam * u[t.i - 1];
  const E b = paired_coefficient(t, f) * u[sigma(t.j) - 1];
  u[t.j - 1] = u[t.j - 1] + a;
  u[sigma(t.i) - 1] = u[sigma(t.i) - 1] + b;
}

template <class E>
Row<E> act_on_row(Row<E> u, const Word<E>& w, const FormKind& f) {
  require(static_cast<int>(u.size()) == f.size(), ErrorKind::SizeMismatch,
          "row length differs from 2n");
  for (const auto& t : expand(w)) {
    validate_token(t, f);
    apply_token(u, t, f);
  }
  return u;
}

template <class E>
Matrix<E> word_matrix(const Word<E>& w, const FormKind& f, const typename E::Carrier& c) {
  // Row i of the product is e_i acted on by the word.
  Matrix<E> out;
  const auto tokens = expand(w);
  for (const auto& t : tokens) validate_token(t, f);
  for (int i = 0; i < f.size(); ++i) {
    Row<E> row(f.size(), E::zero(c));
    row[i] = E::one(c);
    for (const auto& t : tokens) apply_token(row, t, f);
    out.push_back(std::move(row));
  }
  return out;
}

template <class E>
bool congruent_to_identity(const Matrix<E>& a, const Ideal& I) {
  const auto& c = a[0][0].carrier();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      E d = i == j ? a[i][j] - E::one(c) : a[i][j];
      if (!ideal_contains(I, d)) return false;
    }
  return true;
}

// Plain tokens and conjugate cores must carry parameters in I; conjugating
// words are unrestricted.
template <class E>
bool word_in_relative_subgroup(const Word<E>& w, const Ideal& I) {
  for (const auto& item : w) {
    if (item.is_conj()) {
      if (!word_in_relative_subgroup(item.core, I)) return false;
    } else if (!ideal_contains(I, item.token->lam)) {
      return false;
    }
  }
  return true;
}

// Block sum a (+) Id_2 with the identity block in the last two slots.
template <class E>
Matrix<E> block_sum_identity2(const Matrix<E>& a, const typename E::Carrier& c) {
  const std::size_t m = a.size() + 2;
  auto out = identity_matrix<E>(static_cast<int>(m), c);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[i][j] = a[i][j];
  return out;
}

template <class E>
Row<E> unit_row(int m, int k, const typename E::Carrier& c) {
  Row<E> e(m, E::zero(c));
  e[k - 1] = E::one(c);
  return e;
}

}  // namespace umrow
