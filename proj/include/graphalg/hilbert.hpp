#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphalg/cmatrix.hpp"
#include "graphalg/graph.hpp"

namespace graphalg {

/// Element of C0(E0): one complex value per vertex, aligned with the
/// canonical (sorted) vertex order of the graph.
struct VertexFunction {
    std::vector<cplx> values;

    bool operator==(const VertexFunction&) const = default;
};

/// Element of the level-n module: one complex value per length-n path,
/// aligned with the canonical path order (path_space(g, level)). Level 1 is
/// indexed by the canonical (expanded) edge order; level 0 by vertices.
struct ModuleElement {
    std::size_t level = 0;
    std::vector<cplx> values;
};

/// Module map on the level-n module in the canonical path basis.
struct ModuleOperator {
    std::size_t level = 0;
    CMatrix mat;
};

VertexFunction zero_vertex_function(const Graph& g);
VertexFunction constant_vertex_function(const Graph& g, cplx c);
VertexFunction delta_vertex(const Graph& g, const std::string& v);

/// Indicator-style element at a single level-n path; level 1 with an
/// (expanded) edge id is the delta at that edge.
ModuleElement delta_path(const Graph& g, std::size_t level,
                         const std::string& path_or_edge_id);

/// <xi,eta>(v) = sum over paths p with dom(p) = v of conj(xi(p)) * eta(p).
VertexFunction inner_product(const Graph& g, const ModuleElement& xi,
                             const ModuleElement& eta);

/// sup over vertices of <xi,xi>(v)^(1/2).
double module_norm(const Graph& g, const ModuleElement& xi);

/// (xi . f)(p) = xi(p) * f(dom(p)).
ModuleElement right_action(const Graph& g, ModuleElement xi,
                           const VertexFunction& f);

/// Rank-one operator theta_{xi,eta}: zeta -> xi * <eta,zeta>; entries
/// xi(p) * conj(eta(q)) when dom(p) = dom(q), zero otherwise.
ModuleOperator theta_op(const Graph& g, const ModuleElement& xi,
                        const ModuleElement& eta);

/// Left action of f on the level-n module: diagonal with entries f(ran(p)).
ModuleOperator pi_r(const Graph& g, const VertexFunction& f, std::size_t level);

struct BlockInfo {
    std::vector<std::string> edge_ids;  // d^{-1}(v) in canonical order
    std::size_t block_dim = 0;          // |d^{-1}(v)|^2
};

/// Partition of the (expanded) edges by domain vertex: the compacts on the
/// level-1 module are block-diagonal with one full matrix algebra per block.
std::map<std::string, BlockInfo> block_structure(const Graph& g);

}  // namespace graphalg
