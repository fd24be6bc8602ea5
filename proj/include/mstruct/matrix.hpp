#pragma once

#include "mstruct/ints.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace mstruct {

using Rational = boost::multiprecision::cpp_rational;

// Dense integer matrix, row-major. Complexes store boundaries sparsely and
// convert to IntMat for the linear-algebra heavy steps.
struct IntMat {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static IntMat identity(int n);
    bool is_zero() const;
    bool operator==(const IntMat& o) const = default;
};

IntMat mul(const IntMat& x, const IntMat& y);
IntMat add(const IntMat& x, const IntMat& y);
IntMat sub(const IntMat& x, const IntMat& y);
IntMat transpose(const IntMat& x);
std::vector<Int> apply(const IntMat& m, const std::vector<Int>& v);

// u * a * v = d with u, v unimodular; uinv/vinv are their inverses.
struct SmithResult {
    IntMat d;
    IntMat u, uinv;
    IntMat v, vinv;
};

SmithResult smith(const IntMat& a, bool with_transforms = true);

// Nonzero diagonal entries of the Smith form, each dividing the next.
std::vector<Int> invariant_factors(const IntMat& a);
int rank(const IntMat& a);

// Columns form a basis of ker(a) as a direct summand of Z^cols.
IntMat kernel_basis(const IntMat& a);

std::optional<std::vector<Int>> solve(const IntMat& a, const std::vector<Int>& b);
std::optional<std::vector<Rational>> solve_rational(const IntMat& a, const std::vector<Int>& b);

// Independent columns spanning the same lattice as span(a).
IntMat lattice_basis(const IntMat& a);

// For a split-injective s (n x r), columns completing im(s) to a basis of Z^n.
IntMat split_complement(const IntMat& s);

// Invariant factors of (Z^k)/col-span(rel); result as (free_rank, torsion>1 list).
struct AbelianInvariants {
    int free_rank = 0;
    std::vector<Int> torsion;
    bool operator==(const AbelianInvariants& o) const = default;
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

AbelianInvariants quotient_invariants(int ambient_rank, const IntMat& rel);

// num: independent columns of a subgroup N of Z^n; den: generators of a
// subgroup of N. Invariants of N / span(den).
AbelianInvariants subquotient_invariants(const IntMat& num, const IntMat& den);

}  // namespace mstruct
