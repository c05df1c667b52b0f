#include "graphalg/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace graphalg {

Mult Mult::finite(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Mult: multiplicity must be positive");
    if (n == kOmega) throw std::invalid_argument("Mult: count too large");
    Mult m;
    m.v_ = n;
    return m;
}

std::uint64_t Mult::count() const {
    if (is_omega()) throw std::logic_error("Mult: count() on omega multiplicity");
    return v_;
}

std::string Mult::str() const {
    return is_omega() ? "inf" : std::to_string(v_);
}

namespace {

std::vector<std::string> canonical_vertices(std::vector<std::string> vs,
                                            const char* side) {
    std::sort(vs.begin(), vs.end());
    for (std::size_t i = 0; i + 1 < vs.size(); ++i)
        if (vs[i] == vs[i + 1])
            throw std::invalid_argument(std::string("duplicate ") + side +
                                        " vertex id: " + vs[i]);
    for (const auto& v : vs)
        if (v.empty()) throw std::invalid_argument("empty vertex id");
    return vs;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& ids) {
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < ids.size(); ++i) m[ids[i]] = i;
    return m;
}

}  // namespace

Correspondence::Correspondence(std::vector<std::string> dom_vertices,
                               std::vector<std::string> ran_vertices,
                               std::vector<EdgeRecord> edges)
    : dom_(canonical_vertices(std::move(dom_vertices), "domain")),
      ran_(canonical_vertices(std::move(ran_vertices), "range")),
      edges_(std::move(edges)) {
    dom_idx_ = index_of(dom_);
    ran_idx_ = index_of(ran_);
    std::sort(edges_.begin(), edges_.end(),
              [](const EdgeRecord& a, const EdgeRecord& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const EdgeRecord& e = edges_[i];
        if (e.id.empty()) throw std::invalid_argument("empty edge id");
        if (i > 0 && edges_[i - 1].id == e.id)
            throw std::invalid_argument("duplicate edge id: " + e.id);
        if (!dom_idx_.count(e.dom))
            throw std::invalid_argument("edge " + e.id + ": unknown domain vertex " + e.dom);
        if (!ran_idx_.count(e.ran))
            throw std::invalid_argument("edge " + e.id + ": unknown range vertex " + e.ran);
        edge_idx_[e.id] = i;
    }
}

std::size_t Correspondence::dom_index(const std::string& v) const {
    auto it = dom_idx_.find(v);
    if (it == dom_idx_.end())
        throw std::invalid_argument("unknown domain vertex: " + v);
    return it->second;
}

std::size_t Correspondence::ran_index(const std::string& v) const {
    auto it = ran_idx_.find(v);
    if (it == ran_idx_.end())
        throw std::invalid_argument("unknown range vertex: " + v);
    return it->second;
}

std::size_t Correspondence::edge_index(const std::string& id) const {
    auto it = edge_idx_.find(id);
    if (it == edge_idx_.end()) throw std::invalid_argument("unknown edge id: " + id);
    return it->second;
}

bool Correspondence::has_edge(const std::string& id) const {
    return edge_idx_.count(id) != 0;
}

bool Correspondence::has_infinite_mult() const {
    for (const auto& e : edges_)
        if (e.mult.is_omega()) return true;
    return false;
}

std::uint64_t Correspondence::edge_total() const {
    std::uint64_t total = 0;
    for (const auto& e : edges_) total += e.mult.count();
    return total;
}

Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeRecord> edges)
    : Correspondence(vertices, vertices, std::move(edges)) {}

Graph::Graph(Correspondence c) : Correspondence(std::move(c)) {
    if (!is_square())
        throw std::invalid_argument(
            "Graph: domain and range vertex sets differ");
}

bool Graph::is_expanded() const {
    for (const auto& e : edges())
        if (e.mult != Mult::finite(1)) return false;
    return true;
}

std::vector<EdgeRecord> Correspondence::expanded_edges() const {
    if (has_infinite_mult())
        throw std::invalid_argument(
            "expanded_edges(): an edge has infinite multiplicity");
    std::vector<EdgeRecord> out;
    for (const auto& e : edges_) {
        const std::uint64_t m = e.mult.count();
        if (m == 1) {
            out.push_back(e);
        } else {
            for (std::uint64_t i = 1; i <= m; ++i)
                out.push_back({e.id + "#" + std::to_string(i), e.dom, e.ran,
                               Mult::finite(1)});
        }
    }
    return out;
}

Graph Graph::expanded() const {
    return Graph(vertices(), expanded_edges());
}

Graph build_graph(std::vector<std::string> vertices,
                  std::vector<EdgeRecord> edges) {
    return Graph(std::move(vertices), std::move(edges));
}

VertexClassification classify_vertices(const Graph& g) {
    // In-degree with multiplicity; an omega edge makes it infinite.
    std::map<std::string, std::uint64_t> indeg;
    std::set<std::string> infinite;
    for (const auto& v : g.vertices()) indeg[v] = 0;
    for (const auto& e : g.edges()) {
        if (e.mult.is_omega())
            infinite.insert(e.ran);
        else
            indeg[e.ran] += e.mult.count();
    }
    VertexClassification c;
    for (const auto& v : g.vertices()) {
        const bool inf = infinite.count(v) != 0;
        const bool sce = !inf && indeg[v] == 0;
        if (inf)
            c.inf.push_back(v);
        else
            c.fin.push_back(v);
        if (sce) c.sce.push_back(v);
        if (!inf && !sce)
            c.rg.push_back(v);
        else
            c.sg.push_back(v);
    }
    return c;
}

Graph opposite_graph(const Graph& g) {
    std::vector<EdgeRecord> rev;
    rev.reserve(g.num_edges());
    for (const auto& e : g.edges()) rev.push_back({e.id, e.ran, e.dom, e.mult});
    return Graph(g.vertices(), std::move(rev));
}

Graph from_dynamical_system(const std::vector<std::string>& points,
                            const std::map<std::string, std::string>& sigma) {
    std::vector<EdgeRecord> edges;
    edges.reserve(points.size());
    for (const auto& x : points) {
        auto it = sigma.find(x);
        if (it == sigma.end())
            throw std::invalid_argument("from_dynamical_system: map undefined at " + x);
        edges.push_back({x, x, it->second, Mult::finite(1)});
    }
    return Graph(points, std::move(edges));
}

}  // namespace graphalg
