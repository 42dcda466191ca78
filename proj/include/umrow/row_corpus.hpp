#pragma once

// Seeded rows and group matrices for the reduction experiments.

#include "umrow/corpus.hpp"
#include "umrow/reduction.hpp"

namespace umrow {

RingElement random_element(Sampler& s, const Ring& ring);
RingElement random_unit(Sampler& s, const Ring& ring);

// Random rows over Z/n, rejected until unimodular. Orthogonal rows get a
// unit slot whose partner is solved for so that q(u) = 0.
Row<RingElement> random_unimodular_row(Sampler& s, const Ring& ring, const FormKind& f);

// Unimodular rows congruent to e_1 modulo (d); orthogonal rows are isotropic.
Row<RingElement> random_relative_row(Sampler& s, const Ring& ring, const Integer& d,
                                     const FormKind& f);

// word_matrix of a random word whose tokens all fix the column e_2n, with
// parameters in (d).
Matrix<RingElement> random_matrix_fixing_last(Sampler& s, const Ring& ring, const FormKind& f,
                                              int length, const Integer& d = 1);

// Entries with at most three terms of degree <= max_degree, rejected until a
// witness of degree <= 2 * max_degree exists (and q(u) = 0 if orthogonal).
Row<MonoidRingElement> random_monoid_row(Sampler& s, const MonoidRing& A, const FormKind& f,
                                         long long max_degree);

}  // namespace umrow
