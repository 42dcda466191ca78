#include "umrow/corpus.hpp"

#include <set>

namespace umrow {

Integer Sampler::below(const Integer& n) {
  // Rejection-free for the desk-scale moduli used here: n < 2^63.
  require(n > 0 && n.fits_slong_p(), ErrorKind::DeskScaleLimit, "sampling modulus too large");
  return Integer(static_cast<long>(next() % n.get_ui()));
}

AffineMonoid square_cone_monoid() {
  return AffineMonoid(3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}

std::vector<NamedMonoid> monoid_corpus(std::uint64_t seed) {
  std::vector<NamedMonoid> out = {
      {"free-1", AffineMonoid::free(1)},
      {"free-2", AffineMonoid::free(2)},
      {"free-3", AffineMonoid::free(3)},
      {"free-4", AffineMonoid::free(4)},
      {"numerical-2-3", AffineMonoid(1, {{2}, {3}})},
      {"numerical-3-5", AffineMonoid(1, {{3}, {5}})},
      {"numerical-3-4-5", AffineMonoid(1, {{3}, {4}, {5}})},
      {"veronese-2", AffineMonoid(2, {{2, 0}, {1, 1}, {0, 2}})},
      {"cusp-face", AffineMonoid(2, {{2, 0}, {3, 0}, {0, 1}, {1, 1}})},
      {"rays-1-0-1-3", AffineMonoid(2, {{1, 0}, {1, 1}, {1, 2}, {1, 3}})},
      {"gap-1-2", AffineMonoid(2, {{1, 0}, {1, 1}, {1, 3}})},
      {"seminormal-2-0", AffineMonoid(2, {{2, 0}, {0, 1}, {1, 1}})},
      {"square-cone", square_cone_monoid()},
      {"parity-3", AffineMonoid(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}})},
      {"simplex-index-2", AffineMonoid(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 2}})},
      {"octahedral-slice", AffineMonoid(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}})},
  };
  Sampler s(seed);
  std::set<std::vector<Vec>> seen;
  while (out.size() < 30) {
    const bool plane = out.size() < 24;
    const int r = plane ? 2 : 3;
    const long long hi = plane ? 5 : 3;
    const int count = static_cast<int>(s.range(r, r + 2));
    std::set<Vec> gens;
    while (static_cast<int>(gens.size()) < count) {
      Vec g(r);
      for (auto& x : g) x = s.range(0, hi);
      if (!is_zero(g)) gens.insert(g);
    }
    std::vector<Vec> list(gens.begin(), gens.end());
    if (rank(list) != r || !seen.insert(list).second) continue;
    out.push_back({"random-" + std::to_string(out.size()), AffineMonoid(r, list)});
  }
  return out;
}

}  // namespace umrow
