#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "graphalg/graph.hpp"

namespace graphalg {

/// Dense row-major matrix over arbitrary-precision integers.
struct IntMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<mpz_class> entries;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
    static IntMatrix identity(std::size_t n);

    mpz_class& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const mpz_class& at(std::size_t r, std::size_t c) const {
        return entries[r * cols + c];
    }

    bool operator==(const IntMatrix&) const = default;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

/// Smith normal form S = U * M * V: U, V unimodular, S diagonal with
/// positive d1 | d2 | ... | d_rank and zeros beyond.
struct SnfResult {
    IntMatrix s, u, v;
    std::size_t rank = 0;
};

/// Exact Smith normal form. Pivots are chosen by smallest nonzero absolute
/// value; the factorization identity U*M*V = S is recomputed exactly before
/// returning and a mismatch throws std::logic_error.
SnfResult smith_normal_form(const IntMatrix& m);

/// A finitely generated abelian group Z^free_rank + sum of Z/d_i with the
/// divisibility chain d_i | d_{i+1}; factors equal to 1 are dropped.
struct AbelianGroupPresentation {
    std::size_t free_rank = 0;
    std::vector<mpz_class> invariant_factors;

    bool operator==(const AbelianGroupPresentation&) const = default;
};

/// Human-readable form, e.g. "Z^2 + Z/3" or "0" for the trivial group.
std::string group_str(const AbelianGroupPresentation& g);

/// The integer map delta: Z^{regular vertices} -> Z^{vertices} with
/// delta(v) = [v] - sum over e in r^{-1}(v) of mult(e) * [d(e)].
/// Rows follow the sorted vertex order, columns the sorted regular vertices.
/// Omega edges make their range singular, so no column ever needs their
/// multiplicity.
IntMatrix delta_matrix(const Graph& g);

/// K-groups of the graph algebra: K0 = coker delta, K1 = ker delta. The
/// kernel is a subgroup of a free group, hence free; its basis (columns of V
/// past the rank, in regular-vertex coordinates) is returned alongside.
struct KGroups {
    AbelianGroupPresentation k0;
    AbelianGroupPresentation k1;
    std::vector<std::vector<mpz_class>> k1_basis;
};

KGroups k_groups(const Graph& g);

}  // namespace graphalg
