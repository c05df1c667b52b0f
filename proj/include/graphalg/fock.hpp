#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphalg/cmatrix.hpp"
#include "graphalg/graph.hpp"
#include "graphalg/hilbert.hpp"
#include "graphalg/paths.hpp"

namespace graphalg {

/// Canonical basis of the depth-N truncated Fock module: all paths of level
/// 0..N in canonical order, level by level. Operators on it are plain square
/// CMatrix values of size dim(), interpreted against the basis they were
/// built with.
class FockBasis {
public:
    /// The expanded graph the basis was built over.
    const Graph& graph() const { return graph_; }
    std::size_t depth() const { return depth_; }
    std::size_t dim() const { return offsets_.back(); }

    const std::vector<Path>& level(std::size_t n) const { return levels_.at(n); }
    std::size_t level_size(std::size_t n) const { return levels_.at(n).size(); }
    std::size_t level_offset(std::size_t n) const { return offsets_.at(n); }
    std::size_t level_of(std::size_t index) const;

    const Path& path_at(std::size_t index) const;

    /// Global index of a path given by its display key, or npos.
    static constexpr std::size_t npos = ~std::size_t{0};
    std::size_t index_of(std::size_t level, const std::string& key) const;

    /// Position of an edge id in the canonical expanded edge order.
    std::size_t edge_position(const std::string& edge_id) const {
        return graph_.edge_index(edge_id);
    }

private:
    friend FockBasis build_truncated_fock(const Graph&, std::size_t, std::size_t);
    Graph graph_{std::vector<std::string>{}, {}};
    std::size_t depth_ = 0;
    std::vector<std::vector<Path>> levels_;
    std::vector<std::size_t> offsets_;  // size depth+2; dim = offsets_.back()
    std::vector<std::map<std::string, std::size_t>> pos_;  // key -> local position
};

/// Builds the truncated basis. Multiplicities are expanded first. Throws
/// std::length_error once the accumulated dimension exceeds max_dim.
FockBasis build_truncated_fock(const Graph& g, std::size_t depth,
                               std::size_t max_dim = 20000);

/// Diagonal action of f: multiplies each basis path p by f(ran(p)).
CMatrix sigma0(const FockBasis& b, const VertexFunction& f);

/// Creation by a level-1 element: maps level n to n+1 for n < N, level N to
/// zero. Entry ((e,p), p) = xi(e) for every edge e with d(e) = ran(p).
CMatrix sigma1(const FockBasis& b, const ModuleElement& xi);

/// Creation by a level-n element: p -> sum over q with d(q) = ran(p) of
/// xi(q) (q appended at the range end). n = 0 reduces to sigma0. Throws if
/// xi.level exceeds the depth.
CMatrix t_n(const FockBasis& b, const ModuleElement& xi);

/// Applies a level-n module map to the leading (range-end) n edges of every
/// path of level >= n; zero on levels < n. Entries of x outside its
/// domain-block structure have no composable target and are ignored.
CMatrix phi_n(const FockBasis& b, const ModuleOperator& x);

/// Tensor product of module elements: (xi (x) eta)(q,p) = xi(q) * eta(p)
/// with q at the range end. eta may have level 0 (right action through dom).
ModuleElement tensor_product(const FockBasis& b, const ModuleElement& xi,
                             const ModuleElement& eta);

/// The level-(m-n) element zeta with zeta(e) = sum over q in level n with
/// d(q) = ran(e) of conj(xi(q)) * eta(q,e); pre xi.level < eta.level <= depth.
ModuleElement contract(const FockBasis& b, const ModuleElement& xi,
                       const ModuleElement& eta);

/// Matrix-vector action of a ModuleOperator on a ModuleElement (same level).
ModuleElement apply_module_operator(const ModuleOperator& x,
                                    const ModuleElement& xi);

/// Diagonal projection onto levels <= max_level.
CMatrix level_compression(const FockBasis& b, std::size_t max_level);

/// Operator norm of Q (a - b) Q, Q the projection onto levels <= max_level.
double compressed_residual(const FockBasis& b, const CMatrix& a,
                           const CMatrix& target, std::size_t max_level);

struct DefectCheck {
    CMatrix defect;             // sigma0(f) - phi_1(pi_r(f))
    double residual_vs_theta;   // max-abs deviation from theta_{xi0,eta0}
    double off_level0_max;      // max |entry| outside the level-0 block
    bool pass;                  // residual <= 1e-12 and off-level-0 exactly 0
};

/// Checks that the defect of the truncated pair is exactly the level-0
/// rank-one-sum operator theta_{xi0,eta0}, with xi0 = f and eta0 the
/// indicator of supp f. Throws if f is supported off the regular vertices.
DefectCheck ck_defect_check(const FockBasis& b, const VertexFunction& f);

/// Conjugation by the gauge unitary: diagonal z^level. Requires |z| = 1
/// within 1e-12.
CMatrix gauge_apply(const FockBasis& b, cplx z, const CMatrix& a);

/// Average of gauge_apply over the (2N+1)-th roots of unity: annihilates
/// every nonzero degree the truncated space supports, exactly.
CMatrix conditional_expectation(const FockBasis& b, const CMatrix& a);

struct DynCheck {
    double isometry_residual;    // ||Q (U*U - 1) Q||
    double covariance_residual;  // max_v ||Q (sigma0(dv) U - U sigma0(dv o s)) Q||
    double tol;
    bool pass;
};

/// For a graph with exactly one outgoing edge per vertex (the shape produced
/// by from_dynamical_system): U = sigma1(constant 1) satisfies the isometry
/// and covariance identities on the compression to levels <= N-1.
DynCheck dyn_isometry_check(const FockBasis& b, double tol);

struct RelationResult {
    std::string name;
    double residual;
    double tolerance;
    bool pass;
};

struct FockSuiteResult {
    std::vector<RelationResult> relations;
    bool pass;
    std::size_t depth;
    std::size_t dim;
    std::uint64_t seed;
};

/// Runs the whole truncated-representation relation suite on deterministic
/// pseudo-random elements drawn from seed: Toeplitz axioms, the t_n operator
/// identities, the contraction identity, the defect identity, gauge
/// multiplicativity and degree scaling, and the conditional-expectation
/// identities. Exact identities are held to 1e-12; composed numerics to tol.
FockSuiteResult fock_relation_suite(const FockBasis& b, std::uint64_t seed,
                                    double tol);

}  // namespace graphalg
