#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphalg/cmatrix.hpp"
#include "graphalg/graph.hpp"
#include "graphalg/paths.hpp"
#include "graphalg/rng.hpp"

namespace testutil {

using namespace graphalg;

struct GraphSpec {
    std::size_t max_vertices = 6;
    std::size_t max_edges = 12;
    std::uint64_t max_mult = 3;
    double omega_prob = 0.0;
    bool allow_empty_edges = true;
};

inline Graph random_graph(Rng& rng, const GraphSpec& spec) {
    const std::size_t nv = 1 + rng.index(spec.max_vertices);
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < nv; ++i)
        vertices.push_back("v" + std::to_string(i));
    const std::size_t lo = spec.allow_empty_edges ? 0 : 1;
    const std::size_t ne = lo + rng.index(spec.max_edges + 1 - lo);
    std::vector<EdgeRecord> edges;
    for (std::size_t j = 0; j < ne; ++j) {
        const std::string dom = vertices[rng.index(nv)];
        const std::string ran = vertices[rng.index(nv)];
        Mult m = Mult::finite(1 + rng.index(spec.max_mult));
        if (spec.omega_prob > 0.0 && rng.uniform() < spec.omega_prob)
            m = Mult::omega();
        edges.push_back({"e" + std::to_string(j), dom, ran, m});
    }
    return build_graph(vertices, edges);
}

/// Adjacency count matrix a[i][j] = number of edges (with multiplicity) from
/// vertex i to vertex j, in canonical vertex order. Requires finite mults.
inline std::vector<std::vector<std::uint64_t>> adjacency_counts(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& e : g.edges())
        a[g.vertex_index(e.dom)][g.vertex_index(e.ran)] += e.mult.count();
    return a;
}

/// Independent count of length-n paths: entry sum of the n-th power of the
/// adjacency count matrix.
inline std::uint64_t path_count_oracle(const Graph& g, std::size_t n) {
    const auto a = adjacency_counts(g);
    const std::size_t nv = a.size();
    std::vector<std::vector<std::uint64_t>> p(nv,
                                              std::vector<std::uint64_t>(nv, 0));
    for (std::size_t i = 0; i < nv; ++i) p[i][i] = 1;
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<std::vector<std::uint64_t>> q(
            nv, std::vector<std::uint64_t>(nv, 0));
        for (std::size_t i = 0; i < nv; ++i)
            for (std::size_t k = 0; k < nv; ++k)
                for (std::size_t j = 0; j < nv; ++j)
                    q[i][j] += p[i][k] * a[k][j];
        p = std::move(q);
    }
    std::uint64_t total = 0;
    for (const auto& row : p)
        for (const auto& x : row) total += x;
    return total;
}

/// Brute-force enumeration of the loops without entrances: every simple
/// cycle (DFS over the original edges, visiting only vertices above the
/// base so each cycle is found once, based at its smallest vertex) whose
/// vertices all have multiplicity-weighted in-degree exactly 1.
inline std::vector<Loop> brute_force_loops(const Graph& g) {
    std::map<std::string, std::uint64_t> indeg;
    for (const auto& v : g.vertices()) indeg[v] = 0;
    for (const auto& e : g.edges())
        indeg[e.ran] +=
            e.mult.is_omega() ? 2 : std::min<std::uint64_t>(e.mult.count(), 2);

    std::vector<Loop> found;
    for (const auto& base : g.vertices()) {
        std::vector<std::string> trail;
        std::set<std::string> visited{base};
        std::function<void(const std::string&)> dfs =
            [&](const std::string& at) {
                for (const auto& e : g.edges()) {
                    if (e.dom != at) continue;
                    if (e.ran == base) {
                        trail.push_back(e.id);
                        bool entrance_free = true;
                        for (const auto& id : trail)
                            entrance_free =
                                entrance_free &&
                                indeg.at(g.edge(g.edge_index(id)).dom) == 1;
                        if (entrance_free)
                            found.push_back({Path{trail, base, base}, base});
                        trail.pop_back();
                        continue;
                    }
                    if (e.ran < base || visited.count(e.ran)) continue;
                    visited.insert(e.ran);
                    trail.push_back(e.id);
                    dfs(e.ran);
                    trail.pop_back();
                    visited.erase(e.ran);
                }
            };
        dfs(base);
    }
    std::sort(found.begin(), found.end(), [](const Loop& a, const Loop& b) {
        return a.base_point < b.base_point;
    });
    return found;
}

/// Haar-ish random unitary: Gram-Schmidt on a random complex square matrix.
inline CMatrix random_unitary(Rng& rng, std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rng.box();
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx dot(0.0);
            for (std::size_t r = 0; r < n; ++r)
                dot += std::conj(m.at(r, prev)) * m.at(r, c);
            for (std::size_t r = 0; r < n; ++r)
                m.at(r, c) -= dot * m.at(r, prev);
        }
        double nrm = 0.0;
        for (std::size_t r = 0; r < n; ++r) nrm += std::norm(m.at(r, c));
        nrm = std::sqrt(nrm);
        for (std::size_t r = 0; r < n; ++r) m.at(r, c) /= nrm;
    }
    return m;
}

}  // namespace testutil
