#include "umrow/row_corpus.hpp"

namespace umrow {

namespace {

constexpr int kMaxAttempts = 100000;

}  // namespace

RingElement random_element(Sampler& s, const Ring& ring) {
  require(ring.kind() == RingKind::IntegersMod, ErrorKind::Unsupported,
          "row sampling needs Z/n");
  return ring.element(s.below(ring.modulus()));
}

RingElement random_unit(Sampler& s, const Ring& ring) {
  for (int k = 0; k < kMaxAttempts; ++k) {
    RingElement x = random_element(s, ring);
    if (is_unit(x)) return x;
  }
  fail(ErrorKind::DeskScaleLimit, "no unit found");
}

Row<RingElement> random_unimodular_row(Sampler& s, const Ring& ring, const FormKind& f) {
  const int m = f.size();
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Row<RingElement> u;
    for (int k = 0; k < m; ++k) u.push_back(random_element(s, ring));
    if (f.symplectic()) {
      if (check_unimodular(u)) return u;
      continue;
    }
    const int k = static_cast<int>(s.range(1, m));
    const int p = sigma(k);
    u[k - 1] = random_unit(s, ring);
    u[p - 1] = ring.zero();
    u[p - 1] = -quadratic_value(u) * *ring_inverse(u[k - 1]);
    return u;
  }
  fail(ErrorKind::DeskScaleLimit, "no unimodular row found");
}

Row<RingElement> random_relative_row(Sampler& s, const Ring& ring, const Integer& d,
                                     const FormKind& f) {
  const RingElement dd = ring.element(d);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Row<RingElement> u;
    for (int k = 0; k < f.size(); ++k) u.push_back(dd * random_element(s, ring));
    u[0] = u[0] + ring.one();
    if (!check_unimodular(u)) continue;
    if (f.symplectic()) return u;
    auto inv = ring_inverse(u[0]);
    if (!inv) continue;
    u[1] = ring.zero();
    u[1] = -quadratic_value(u) * *inv;
    return u;
  }
  fail(ErrorKind::DeskScaleLimit, "no relative row found");
}

Matrix<RingElement> random_matrix_fixing_last(Sampler& s, const Ring& ring, const FormKind& f,
                                              int length, const Integer& d) {
  const int m = f.size();
  const RingElement dd = ring.element(d);
  Word<RingElement> w;
  while (static_cast<int>(w.size()) < length) {
    // Token columns: j and sigma(i) for GE, sigma(i) for SE; none may be 2n.
    const int i = static_cast<int>(s.range(1, m));
    if (sigma(i) == m) continue;
    const RingElement lam = dd * random_element(s, ring);
    if (f.symplectic() && s.range(0, 4) == 0) {
      w.push_back(se(i, lam));
      continue;
    }
    const int j = static_cast<int>(s.range(1, m));
    if (j == m || j == i || j == sigma(i)) continue;
    w.push_back(ge(i, j, lam));
  }
  return word_matrix(w, f, ring);
}

Row<MonoidRingElement> random_monoid_row(Sampler& s, const MonoidRing& A, const FormKind& f,
                                         long long max_degree) {
  const auto monomials = members_up_to_degree(A.monoid, max_degree);
  require(A.coeffs.kind() == RingKind::IntegersMod, ErrorKind::Unsupported,
          "monoid row sampling needs Z/n coefficients");
  for (int attempt = 0; attempt < 2000; ++attempt) {
    Row<MonoidRingElement> u;
    for (int k = 0; k < f.size(); ++k) {
      MonoidRingElement::Terms terms;
      const int count = static_cast<int>(s.range(0, 3));
      for (int t = 0; t < count; ++t) {
        const Vec& e = monomials[s.range(0, static_cast<long long>(monomials.size()) - 1)];
        terms[e] = random_unit(s, A.coeffs);
      }
      u.emplace_back(A, std::move(terms));
    }
    if (!is_isotropic(u, f)) continue;
    if (check_unimodular(u, 2 * max_degree)) return u;
  }
  fail(ErrorKind::DeskScaleLimit, "no unimodular monoid-ring row found");
}

}  // namespace umrow
