#pragma once

#include <map>
#include <string>

#include "graphalg/cmatrix.hpp"
#include "graphalg/fock.hpp"
#include "graphalg/graph.hpp"

namespace graphalg {

/// A candidate operator family on C^space_dim: one projection per vertex and
/// one partial isometry per (expanded) edge, all square of the same size.
/// Graphs with multiplicities are matched against their expansion, so S is
/// keyed by the expanded edge ids.
struct OperatorFamily {
    std::size_t space_dim = 0;
    std::map<std::string, CMatrix> P;  // vertex id -> matrix
    std::map<std::string, CMatrix> S;  // edge id -> matrix
};

/// Outcome of a family check: one entry per relation with its maximum
/// residual in operator norm. injective reports the finite-dimensional
/// surrogate "every P_v is a nonzero matrix".
struct CheckReport {
    std::vector<RelationResult> relations;
    bool pass = false;
    bool injective = false;
    double tolerance = 0.0;
};

/// Checks the edge-wise Toeplitz relations:
///   projections   - every P_v Hermitian, idempotent, and P_v P_w = 0 (v != w)
///   isometry      - S_e* S_e = P_{d(e)}
///   orthogonality - S_e* S_f = 0 for e != f
///   range_support - P_{r(e)} S_e = S_e
/// Requires finite multiplicities and a matrix for every vertex and every
/// expanded edge; throws std::invalid_argument otherwise.
CheckReport verify_toeplitz_family(const Graph& g, const OperatorFamily& fam,
                                   double tol);

/// The Toeplitz report plus the Cuntz-Krieger fullness relation
///   fullness - P_v = sum over e with r(e) = v of S_e S_e*
/// checked at the regular vertices only; singular vertices are exempt.
CheckReport verify_ck_family(const Graph& g, const OperatorFamily& fam,
                             double tol);

/// The family generated by the truncated Fock representation:
/// P_v = sigma0(delta_v), S_e = sigma1(delta_e).
OperatorFamily fock_family(const FockBasis& b);

}  // namespace graphalg
