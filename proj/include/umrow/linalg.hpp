#pragma once

// Exact linear algebra kernels shared by the geometry and reduction code:
// rational elimination, integer lattices in Hermite form, and linear systems
// over Z/n.

#include <optional>
#include <vector>

#include "umrow/coeff_rings.hpp"

namespace umrow {

using Vec = std::vector<long long>;
using QVec = std::vector<Rational>;

inline Rational rat(long long x) { return Rational(static_cast<long>(x)); }

QVec to_rational(const Vec& v);
long long dot(const Vec& a, const Vec& b);
Rational dot(const Vec& a, const QVec& b);
Rational dot(const QVec& a, const QVec& b);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, long long k);
bool is_zero(const Vec& v);

// Rank over Q.
int rank(const std::vector<Vec>& rows);
int rank(const std::vector<QVec>& rows);

// Basis of {x in Q^cols : rows * x = 0}.
std::vector<QVec> nullspace(const std::vector<QVec>& rows, int cols);

// Some x with A x = b, or nullopt.
std::optional<QVec> solve(const std::vector<QVec>& A, const QVec& b);

// Smallest positive integer multiple of v (v rational) with coprime entries.
Vec primitive(const QVec& v);
Vec primitive(const Vec& v);

// Affine dimension of a point set; -1 for the empty set.
int affine_dimension(const std::vector<QVec>& points);

// Echelon (row Hermite) basis of the lattice spanned by `gens`.
std::vector<Vec> hermite_basis(const std::vector<Vec>& gens);

// Membership of x in the lattice with the given Hermite basis.
bool in_lattice(const std::vector<Vec>& hermite, const Vec& x);

// Some x in (Z/n)^cols with A x = b (mod n), or nullopt. Entries of A and b
// are integer representatives. Solves over each prime-power factor of n
// with valuation pivoting and recombines by CRT.
std::optional<std::vector<Integer>> solve_mod(
    const std::vector<std::vector<Integer>>& A, const std::vector<Integer>& b,
    const Integer& n);

// Chinese remainder: x = a (mod m1), x = b (mod m2), coprime moduli.
Integer crt(const Integer& a, const Integer& m1, const Integer& b,
            const Integer& m2);

}  // namespace umrow
