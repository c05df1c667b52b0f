#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphalg/graph.hpp"

namespace graphalg {

/// A finite path. Edges are stored in traversal order: edge_ids.front() is
/// e_1 (the edge leaving dom) and edge_ids.back() is e_n (the edge entering
/// ran), so consecutive edges satisfy d(e_{k+1}) = r(e_k). A level-0 path is
/// a bare vertex: empty edge list, dom == ran.
///
/// Canonical path order: by level first, then lexicographically on the edge
/// id sequence read e_1 first (level 0: by vertex id).
struct Path {
    std::vector<std::string> edge_ids;
    std::string dom, ran;

    std::size_t level() const { return edge_ids.size(); }

    /// Display form "(e_n,...,e_1)" (range end first); a level-0 path prints
    /// as its vertex.
    std::string str() const;

    bool operator==(const Path&) const = default;
};

/// A cycle: path with ran == dom, plus its designated base point.
struct Loop {
    Path path;
    std::string base_point;  // equals path.dom == path.ran

    bool operator==(const Loop&) const = default;
};

/// The identity correspondence on a vertex set: one edge per vertex, id and
/// endpoints all equal to the vertex.
Correspondence identity_correspondence(std::vector<std::string> vertices);

/// Fiber-product composition of g: E0 -> F0 with h: F0 -> G0. Edges are the
/// pairs (e' in h, e in g) with h.dom(e') = g.ran(e), named "(e',e)", with
/// dom = g.dom(e) and ran = h.ran(e'). Multiplicities are expanded first, so
/// every composite has multiplicity 1.
/// Throws on vertex-set mismatch or omega multiplicity.
Correspondence compose(const Correspondence& g, const Correspondence& h);

/// All length-n paths of g in canonical order; n = 0 yields the vertices.
/// Multiplicities are expanded first (edge ids in the result refer to the
/// expanded graph). Throws on omega multiplicity.
std::vector<Path> path_space(const Graph& g, std::size_t n);

/// The level-n path space viewed as a correspondence E0 -> E0: one edge per
/// path, with the path's display string as id.
Correspondence paths_as_correspondence(const Graph& g, std::size_t n);

/// All simple cycles in which every cycle vertex has total in-degree exactly
/// 1 (counting multiplicity; omega counts as infinite). These are precisely
/// the loops without entrances. Sorted by base point; each cycle is based at
/// its smallest vertex.
std::vector<Loop> cycles_without_entrances(const Graph& g);

/// Condition L: no loop without entrances.
bool is_topologically_free(const Graph& g);

/// A non-returning path (e_1 not reused among e_2..e_m) of length m >= n
/// whose range lies in targets, if one exists with m <= n + |E1| + |E0|
/// (expanded edge count); the earliest such path in canonical order.
/// n = 0 is satisfied by a bare vertex in targets. Unknown target ids throw.
std::optional<Path> find_non_returning_path(const Graph& g,
                                            const std::vector<std::string>& targets,
                                            std::size_t n);

}  // namespace graphalg
