#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace graphalg {

/// Edge multiplicity: a positive count or omega (infinitely many parallel
/// edges).
class Mult {
public:
    Mult() : v_(1) {}

    static Mult finite(std::uint64_t n);  // throws if n == 0
    static Mult omega() { Mult m; m.v_ = kOmega; return m; }

    bool is_omega() const { return v_ == kOmega; }
    std::uint64_t count() const;  // throws if omega

    bool operator==(const Mult& o) const { return v_ == o.v_; }
    bool operator!=(const Mult& o) const { return v_ != o.v_; }

    /// "inf" for omega, decimal count otherwise.
    std::string str() const;

private:
    static constexpr std::uint64_t kOmega = ~std::uint64_t{0};
    std::uint64_t v_;
};

struct EdgeRecord {
    std::string id;
    std::string dom;  // domain (source) vertex
    std::string ran;  // range (target) vertex
    Mult mult;

    bool operator==(const EdgeRecord& o) const = default;
};

/// A correspondence from one finite vertex set to another: an edge set with
/// domain and range maps and per-edge multiplicities. Construction
/// canonicalizes (vertices and edges sorted by id) and validates ids and
/// endpoints.
class Correspondence {
public:
    Correspondence(std::vector<std::string> dom_vertices,
                   std::vector<std::string> ran_vertices,
                   std::vector<EdgeRecord> edges);

    const std::vector<std::string>& dom_vertices() const { return dom_; }
    const std::vector<std::string>& ran_vertices() const { return ran_; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }

    std::size_t num_edges() const { return edges_.size(); }
    const EdgeRecord& edge(std::size_t i) const { return edges_.at(i); }

    std::size_t dom_index(const std::string& v) const;   // throws on unknown id
    std::size_t ran_index(const std::string& v) const;
    std::size_t edge_index(const std::string& id) const;
    bool has_edge(const std::string& id) const;

    bool has_infinite_mult() const;
    /// Number of edges counted with multiplicity. Throws if any is omega.
    std::uint64_t edge_total() const;

    /// One record per edge: a record with finite multiplicity m > 1 becomes
    /// records id#1 .. id#m. Throws if any multiplicity is omega.
    std::vector<EdgeRecord> expanded_edges() const;

    bool is_square() const { return dom_ == ran_; }

private:
    std::vector<std::string> dom_, ran_;
    std::vector<EdgeRecord> edges_;
    std::map<std::string, std::size_t> dom_idx_, ran_idx_, edge_idx_;
};

/// A correspondence from a vertex set to itself: a directed graph with edge
/// multiplicities.
class Graph : public Correspondence {
public:
    Graph(std::vector<std::string> vertices, std::vector<EdgeRecord> edges);
    explicit Graph(Correspondence c);  // throws unless dom == ran

    const std::vector<std::string>& vertices() const { return dom_vertices(); }
    std::size_t num_vertices() const { return vertices().size(); }
    std::size_t vertex_index(const std::string& v) const { return dom_index(v); }

    bool is_expanded() const;  // every record has multiplicity 1

    /// One record per edge: a record with finite multiplicity m > 1 becomes
    /// records id#1 .. id#m. Throws if any multiplicity is omega.
    Graph expanded() const;
};

/// Validates and canonicalizes; same contract as the Graph constructor.
Graph build_graph(std::vector<std::string> vertices,
                  std::vector<EdgeRecord> edges);

/// Vertex classes. fin holds every vertex of finite in-degree (sources
/// included), so sce is a subset of fin; rg = fin minus sce and sg = the rest
/// partition the vertex set.
struct VertexClassification {
    std::vector<std::string> sce;  // no incoming edges
    std::vector<std::string> fin;  // finite in-degree (includes sce)
    std::vector<std::string> inf;  // receives an omega-multiplicity edge
    std::vector<std::string> rg;   // regular: fin \ sce
    std::vector<std::string> sg;   // singular: complement of rg
};

VertexClassification classify_vertices(const Graph& g);

/// Same vertices, every edge reversed (dom and ran swapped), ids kept.
Graph opposite_graph(const Graph& g);

/// Graph of a map sigma on a finite point set: one edge per point x, from x
/// to sigma(x), with the point's id. sigma must be total on points.
Graph from_dynamical_system(const std::vector<std::string>& points,
                            const std::map<std::string, std::string>& sigma);

}  // namespace graphalg
