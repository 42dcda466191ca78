#include "umrow/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace umrow {

QVec to_rational(const Vec& v) {
  QVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

long long dot(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), ErrorKind::SizeMismatch, "dot: length mismatch");
  long long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Rational dot(const Vec& a, const QVec& b) {
  require(a.size() == b.size(), ErrorKind::SizeMismatch, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += Rational(static_cast<long>(a[k])) * b[k];
  return s;
}

Rational dot(const QVec& a, const QVec& b) {
  require(a.size() == b.size(), ErrorKind::SizeMismatch, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += b[k];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t k = 0; k < a.size(); ++k) out[k] -= b[k];
  return out;
}

Vec scale(const Vec& a, long long k) {
  Vec out(a);
  for (auto& x : out) x *= k;
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(std::vector<QVec>& m, int cols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(const std::vector<Vec>& rows) {
  std::vector<QVec> q;
  q.reserve(rows.size());
  for (const auto& r : rows) q.push_back(to_rational(r));
  return rank(q);
}

int rank(const std::vector<QVec>& rows) {
  if (rows.empty()) return 0;
  std::vector<QVec> m = rows;
  return static_cast<int>(rref(m, static_cast<int>(rows.front().size())).size());
}

std::vector<QVec> nullspace(const std::vector<QVec>& rows, int cols) {
  std::vector<QVec> m = rows;
  std::vector<int> pivots = rows.empty() ? std::vector<int>{} : rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const std::vector<QVec>& A, const QVec& b) {
  require(A.size() == b.size(), ErrorKind::SizeMismatch, "solve: row mismatch");
  if (A.empty()) return QVec{};
  const int cols = static_cast<int>(A.front().size());
  std::vector<QVec> m;
  m.reserve(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    QVec row = A[i];
    row.push_back(b[i]);
    m.push_back(std::move(row));
  }
  std::vector<int> pivots = rref(m, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  QVec x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

Vec primitive(const QVec& v) {
  Integer l = 1;
  for (const auto& x : v) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& x : v) {
    Integer k = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    ints.push_back(k);
  }
  Vec out;
  for (auto& k : ints) {
    if (g != 0) k /= g;
    require(k.fits_slong_p(), ErrorKind::DeskScaleLimit, "coordinate overflow");
    out.push_back(k.get_si());
  }
  return out;
}

Vec primitive(const Vec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, std::llabs(x));
  if (g <= 1) return v;
  Vec out(v);
  for (auto& x : out) x /= g;
  return out;
}

int affine_dimension(const std::vector<QVec>& points) {
  if (points.empty()) return -1;
  std::vector<QVec> diffs;
  for (std::size_t k = 1; k < points.size(); ++k) {
    QVec d(points[k]);
    for (std::size_t j = 0; j < d.size(); ++j) d[j] -= points[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(diffs);
}

std::vector<Vec> hermite_basis(const std::vector<Vec>& gens) {
  if (gens.empty()) return {};
  const std::size_t cols = gens.front().size();
  std::vector<std::vector<Integer>> m;
  for (const auto& g : gens) {
    std::vector<Integer> row;
    for (long long x : g) row.emplace_back(static_cast<long>(x));
    m.push_back(std::move(row));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    // Euclid on column c among rows r..end until a single nonzero remains.
    while (true) {
      std::size_t best = m.size();
      for (std::size_t i = r; i < m.size(); ++i) {
        if (m[i][c] != 0 && (best == m.size() || abs(m[i][c]) < abs(m[best][c]))) {
          best = i;
        }
      }
      if (best == m.size()) break;
      std::swap(m[r], m[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r < m.size() && m[r][c] != 0) {
      if (m[r][c] < 0) {
        for (auto& x : m[r]) x = -x;
      }
      for (std::size_t i = 0; i < r; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= q * m[r][j];
      }
      ++r;
    }
  }
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < r; ++i) {
    Vec row;
    for (const auto& x : m[i]) {
      require(x.fits_slong_p(), ErrorKind::DeskScaleLimit, "lattice basis overflow");
      row.push_back(x.get_si());
    }
    basis.push_back(std::move(row));
  }
  return basis;
}

bool in_lattice(const std::vector<Vec>& hermite, const Vec& x) {
  Vec rest(x);
  for (const auto& row : hermite) {
    std::size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    if (rest[c] % row[c] != 0) return false;
    long long q = rest[c] / row[c];
    for (std::size_t j = 0; j < row.size(); ++j) rest[j] -= q * row[j];
  }
  return is_zero(rest);
}

Integer crt(const Integer& a, const Integer& m1, const Integer& b,
            const Integer& m2) {
  Integer inv;
  mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
  Integer t = ((b - a) * inv) % m2;
  if (t < 0) t += m2;
  Integer x = (a + m1 * t) % (m1 * m2);
  if (x < 0) x += m1 * m2;
  return x;
}

namespace {

Integer canon(const Integer& x, const Integer& q) {
  Integer r = x % q;
  if (r < 0) r += q;
  return r;
}

int valuation(const Integer& x, const Integer& p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  Integer y = x;
  while (v < cap && mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
    y /= p;
    ++v;
  }
  return v;
}

// Solve over the chain ring Z/p^a with full valuation pivoting. Every row of
// the remaining block has all entries divisible by the pivot's p-power, so
// solvability of a pivot row does not depend on the later unknowns.
std::optional<std::vector<Integer>> solve_prime_power(
    std::vector<std::vector<Integer>> m, std::vector<Integer> rhs,
    const Integer& p, int a) {
  Integer q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(a));
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  for (auto& row : m)
    for (auto& x : row) x = canon(x, q);
  for (auto& x : rhs) x = canon(x, q);

  struct Pivot {
    std::size_t row, col;
    int val;
  };
  std::vector<Pivot> pivots;
  std::vector<bool> used_col(cols, false);
  std::size_t r = 0;
  while (r < rows) {
    int best_val = a;
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (used_col[j] || m[i][j] == 0) continue;
        int v = valuation(m[i][j], p, a);
        if (v < best_val) {
          best_val = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows) break;
    std::swap(m[r], m[bi]);
    std::swap(rhs[r], rhs[bi]);
    Integer pv;
    mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(best_val));
    Integer unit_part = m[r][bj] / pv;
    Integer unit_inv;
    mpz_invert(unit_inv.get_mpz_t(), unit_part.get_mpz_t(), q.get_mpz_t());
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][bj] == 0) continue;
      Integer t = canon((m[i][bj] / pv) * unit_inv, q);
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = canon(m[i][j] - t * m[r][j], q);
      rhs[i] = canon(rhs[i] - t * rhs[r], q);
    }
    used_col[bj] = true;
    pivots.push_back({r, bj, best_val});
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<Integer> x(cols, Integer(0));
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    Integer s = rhs[it->row];
    for (std::size_t j = 0; j < cols; ++j) {
      if (j != it->col) s -= m[it->row][j] * x[j];
    }
    s = canon(s, q);
    Integer pv;
    mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(it->val));
    if (!mpz_divisible_p(s.get_mpz_t(), pv.get_mpz_t())) return std::nullopt;
    Integer unit_inv;
    Integer unit_part = m[it->row][it->col] / pv;
    mpz_invert(unit_inv.get_mpz_t(), unit_part.get_mpz_t(), q.get_mpz_t());
    x[it->col] = canon((s / pv) * unit_inv, q);
  }
  return x;
}

}  // namespace

std::optional<std::vector<Integer>> solve_mod(
    const std::vector<std::vector<Integer>>& A, const std::vector<Integer>& b,
    const Integer& n) {
  require(A.size() == b.size(), ErrorKind::SizeMismatch, "solve_mod: row mismatch");
  const std::size_t cols = A.empty() ? 0 : A.front().size();
  std::vector<Integer> x(cols, Integer(0));
  Integer modulus = 1;
  for (const auto& [p, e] : factor_modulus(n)) {
    auto part = solve_prime_power(A, b, p, e);
    if (!part) return std::nullopt;
    Integer q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    for (std::size_t j = 0; j < cols; ++j) x[j] = crt(x[j], modulus, (*part)[j], q);
    modulus *= q;
  }
  return x;
}

}  // namespace umrow
