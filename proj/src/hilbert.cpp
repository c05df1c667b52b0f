#include "graphalg/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "graphalg/paths.hpp"

namespace graphalg {

namespace {

void check_vertex_function(const Graph& g, const VertexFunction& f) {
    if (f.values.size() != g.num_vertices())
        throw std::invalid_argument("VertexFunction size does not match vertex count");
}

std::vector<Path> checked_paths(const Graph& g, const ModuleElement& xi) {
    auto ps = path_space(g, xi.level);
    if (xi.values.size() != ps.size())
        throw std::invalid_argument("ModuleElement size does not match path space");
    return ps;
}

}  // namespace

VertexFunction zero_vertex_function(const Graph& g) {
    return {std::vector<cplx>(g.num_vertices(), cplx(0.0))};
}

VertexFunction constant_vertex_function(const Graph& g, cplx c) {
    return {std::vector<cplx>(g.num_vertices(), c)};
}

VertexFunction delta_vertex(const Graph& g, const std::string& v) {
    VertexFunction f = zero_vertex_function(g);
    f.values[g.vertex_index(v)] = 1.0;
    return f;
}

ModuleElement delta_path(const Graph& g, std::size_t level,
                         const std::string& path_or_edge_id) {
    const auto ps = path_space(g, level);
    ModuleElement xi{level, std::vector<cplx>(ps.size(), cplx(0.0))};
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::string key =
            level == 1 ? ps[i].edge_ids[0] : ps[i].str();
        if (key == path_or_edge_id) {
            xi.values[i] = 1.0;
            return xi;
        }
    }
    throw std::invalid_argument("delta_path: no level-" + std::to_string(level) +
                                " path named " + path_or_edge_id);
}

VertexFunction inner_product(const Graph& g, const ModuleElement& xi,
                             const ModuleElement& eta) {
    if (xi.level != eta.level)
        throw std::invalid_argument("inner_product: level mismatch");
    const auto ps = checked_paths(g, xi);
    if (eta.values.size() != ps.size())
        throw std::invalid_argument("ModuleElement size does not match path space");
    VertexFunction out = zero_vertex_function(g);
    for (std::size_t i = 0; i < ps.size(); ++i)
        out.values[g.vertex_index(ps[i].dom)] +=
            std::conj(xi.values[i]) * eta.values[i];
    return out;
}

double module_norm(const Graph& g, const ModuleElement& xi) {
    const auto ip = inner_product(g, xi, xi);
    double m = 0.0;
    for (const auto& v : ip.values) m = std::max(m, v.real());
    return std::sqrt(std::max(m, 0.0));
}

ModuleElement right_action(const Graph& g, ModuleElement xi,
                           const VertexFunction& f) {
    check_vertex_function(g, f);
    const auto ps = checked_paths(g, xi);
    for (std::size_t i = 0; i < ps.size(); ++i)
        xi.values[i] *= f.values[g.vertex_index(ps[i].dom)];
    return xi;
}

ModuleOperator theta_op(const Graph& g, const ModuleElement& xi,
                        const ModuleElement& eta) {
    if (xi.level != eta.level)
        throw std::invalid_argument("theta_op: level mismatch");
    const auto ps = checked_paths(g, xi);
    if (eta.values.size() != ps.size())
        throw std::invalid_argument("ModuleElement size does not match path space");
    ModuleOperator op{xi.level, CMatrix(ps.size(), ps.size())};
    for (std::size_t r = 0; r < ps.size(); ++r) {
        if (xi.values[r] == cplx(0.0)) continue;
        for (std::size_t c = 0; c < ps.size(); ++c)
            if (ps[r].dom == ps[c].dom)
                op.mat.at(r, c) = xi.values[r] * std::conj(eta.values[c]);
    }
    return op;
}

ModuleOperator pi_r(const Graph& g, const VertexFunction& f, std::size_t level) {
    check_vertex_function(g, f);
    const auto ps = path_space(g, level);
    ModuleOperator op{level, CMatrix(ps.size(), ps.size())};
    for (std::size_t i = 0; i < ps.size(); ++i)
        op.mat.at(i, i) = f.values[g.vertex_index(ps[i].ran)];
    return op;
}

std::map<std::string, BlockInfo> block_structure(const Graph& g) {
    std::map<std::string, BlockInfo> out;
    for (const auto& v : g.vertices()) out[v] = BlockInfo{};
    for (const auto& e : g.expanded_edges()) out[e.dom].edge_ids.push_back(e.id);
    for (auto& [v, info] : out) info.block_dim = info.edge_ids.size() * info.edge_ids.size();
    return out;
}

}  // namespace graphalg
