#include "graphalg/paths.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace graphalg {

std::string Path::str() const {
    if (edge_ids.empty()) return dom;
    std::string s = "(";
    for (std::size_t i = edge_ids.size(); i-- > 0;) {
        s += edge_ids[i];
        if (i > 0) s += ",";
    }
    s += ")";
    return s;
}

Correspondence identity_correspondence(std::vector<std::string> vertices) {
    std::vector<EdgeRecord> edges;
    edges.reserve(vertices.size());
    for (const auto& v : vertices) edges.push_back({v, v, v, Mult::finite(1)});
    std::vector<std::string> ran = vertices;
    return Correspondence(std::move(vertices), std::move(ran), std::move(edges));
}

Correspondence compose(const Correspondence& g, const Correspondence& h) {
    if (g.ran_vertices() != h.dom_vertices())
        throw std::invalid_argument(
            "compose: range vertices of the first factor differ from domain "
            "vertices of the second");
    const auto ge = g.expanded_edges();
    const auto he = h.expanded_edges();
    // Bucket h's edges by domain vertex so the fiber pairs come out directly.
    std::map<std::string, std::vector<const EdgeRecord*>> by_dom;
    for (const auto& f : he) by_dom[f.dom].push_back(&f);
    std::vector<EdgeRecord> out;
    for (const auto& e : ge) {
        auto it = by_dom.find(e.ran);
        if (it == by_dom.end()) continue;
        for (const EdgeRecord* f : it->second)
            out.push_back({"(" + f->id + "," + e.id + ")", e.dom, f->ran,
                           Mult::finite(1)});
    }
    return Correspondence(g.dom_vertices(), h.ran_vertices(), std::move(out));
}

namespace {

// Out-edges keyed by domain vertex, preserving canonical edge order.
std::map<std::string, std::vector<const EdgeRecord*>> out_edges(const Graph& ex) {
    std::map<std::string, std::vector<const EdgeRecord*>> m;
    for (const auto& e : ex.edges()) m[e.dom].push_back(&e);
    return m;
}

// Extends every path by one edge at the range end, keeping canonical order.
std::vector<Path> extend(const std::map<std::string, std::vector<const EdgeRecord*>>& out,
                         const std::vector<Path>& cur) {
    std::vector<Path> next;
    for (const auto& p : cur) {
        auto it = out.find(p.ran);
        if (it == out.end()) continue;
        for (const EdgeRecord* e : it->second) {
            Path q = p;
            q.edge_ids.push_back(e->id);
            q.ran = e->ran;
            next.push_back(std::move(q));
        }
    }
    return next;
}

}  // namespace

std::vector<Path> path_space(const Graph& g, std::size_t n) {
    const Graph ex = g.expanded();
    if (n == 0) {
        std::vector<Path> vs;
        vs.reserve(ex.num_vertices());
        for (const auto& v : ex.vertices()) vs.push_back({{}, v, v});
        return vs;
    }
    // Level 1 is the edge list itself (already in canonical id order); higher
    // levels extend at the range end, which appends the least significant
    // position of the lexicographic order.
    std::vector<Path> cur;
    cur.reserve(ex.num_edges());
    for (const auto& e : ex.edges()) cur.push_back({{e.id}, e.dom, e.ran});
    const auto out = out_edges(ex);
    for (std::size_t k = 2; k <= n; ++k) cur = extend(out, cur);
    return cur;
}

Correspondence paths_as_correspondence(const Graph& g, std::size_t n) {
    std::vector<EdgeRecord> edges;
    for (const auto& p : path_space(g, n))
        edges.push_back({p.str(), p.dom, p.ran, Mult::finite(1)});
    return Correspondence(g.vertices(), g.vertices(), std::move(edges));
}

std::vector<Loop> cycles_without_entrances(const Graph& g) {
    // Total in-degree, capped at 2 (all that matters is ==1), with the unique
    // incoming edge of each in-degree-1 vertex. Omega counts as many.
    std::map<std::string, int> indeg;
    std::map<std::string, const EdgeRecord*> unique_in;
    for (const auto& v : g.vertices()) indeg[v] = 0;
    for (const auto& e : g.edges()) {
        int w = 2;
        if (!e.mult.is_omega() && e.mult.count() == 1) w = 1;
        int& c = indeg[e.ran];
        c = std::min(c + w, 2);
        if (c == 1)
            unique_in[e.ran] = &e;
        else
            unique_in.erase(e.ran);
    }

    // A loop without entrances traverses a simple cycle all of whose vertices
    // have in-degree 1, i.e. a cycle of the partial backward map
    // v -> dom(unique incoming edge of v). Walk each component once.
    std::map<std::string, int> color;  // 0 new, 1 on current walk, 2 done
    for (const auto& v : g.vertices()) color[v] = 0;
    std::vector<Loop> loops;

    for (const auto& start : g.vertices()) {
        if (color[start] != 0 || indeg[start] != 1) continue;
        std::vector<std::string> walk;
        std::string cur = start;
        while (true) {
            if (indeg[cur] != 1 || color[cur] == 2) break;
            if (color[cur] == 1) {
                // Cycle: the tail of the walk from cur onward, in backward
                // order (walk[i+1] = prev(walk[i])).
                auto it = std::find(walk.begin(), walk.end(), cur);
                std::vector<std::string> cyc(it, walk.end());
                std::string base = *std::min_element(cyc.begin(), cyc.end());
                // succ(cyc[k]) = cyc[k-1]; succ(cyc[0]) = cyc.back()
                auto succ = [&](std::size_t i) {
                    return i == 0 ? cyc.size() - 1 : i - 1;
                };
                std::size_t i =
                    std::find(cyc.begin(), cyc.end(), base) - cyc.begin();
                Path p{{}, base, base};
                std::size_t j = i;
                do {
                    j = succ(j);
                    p.edge_ids.push_back(unique_in[cyc[j]]->id);
                } while (j != i);
                loops.push_back({std::move(p), base});
                break;
            }
            color[cur] = 1;
            walk.push_back(cur);
            cur = unique_in[cur]->dom;
        }
        for (const auto& w : walk) color[w] = 2;
    }

    std::sort(loops.begin(), loops.end(),
              [](const Loop& a, const Loop& b) { return a.base_point < b.base_point; });
    return loops;
}

bool is_topologically_free(const Graph& g) {
    return cycles_without_entrances(g).empty();
}

std::optional<Path> find_non_returning_path(const Graph& g,
                                            const std::vector<std::string>& targets,
                                            std::size_t n) {
    std::set<std::string> tset;
    for (const auto& v : targets) {
        g.vertex_index(v);  // validate
        tset.insert(v);
    }
    if (tset.empty()) return std::nullopt;
    if (n == 0) {
        const std::string& v = *tset.begin();
        return Path{{}, v, v};
    }

    const Graph ex = g.expanded();
    if (ex.num_edges() == 0) return std::nullopt;
    const std::size_t bound = n + ex.num_edges() + ex.num_vertices();
    const auto out = out_edges(ex);
    const std::size_t nv = ex.num_vertices();

    // reach[a][k][vi]: a path of k edges from vertex vi avoiding edge a ends
    // in the target set. Length-1 paths use k=0 at the edge's range.
    std::vector<std::vector<std::vector<char>>> reach(ex.num_edges());
    for (std::size_t a = 0; a < ex.num_edges(); ++a) {
        auto& t = reach[a];
        t.assign(bound, std::vector<char>(nv, 0));
        for (std::size_t vi = 0; vi < nv; ++vi)
            t[0][vi] = tset.count(ex.vertices()[vi]) ? 1 : 0;
        for (std::size_t k = 1; k < bound; ++k)
            for (std::size_t ei = 0; ei < ex.num_edges(); ++ei) {
                if (ei == a) continue;
                const EdgeRecord& e = ex.edge(ei);
                if (t[k - 1][ex.vertex_index(e.ran)])
                    t[k][ex.vertex_index(e.dom)] = 1;
            }
    }

    for (std::size_t m = n; m <= bound; ++m) {
        for (std::size_t a = 0; a < ex.num_edges(); ++a) {
            const EdgeRecord& e1 = ex.edge(a);
            if (!reach[a][m - 1][ex.vertex_index(e1.ran)]) continue;
            // Greedy smallest continuation: canonical-order witness.
            Path p{{e1.id}, e1.dom, e1.ran};
            std::string w = e1.ran;
            for (std::size_t j = 2; j <= m; ++j) {
                for (const EdgeRecord* e : out.at(w)) {
                    if (e->id == e1.id) continue;
                    if (reach[a][m - j][ex.vertex_index(e->ran)]) {
                        p.edge_ids.push_back(e->id);
                        w = e->ran;
                        break;
                    }
                }
            }
            p.ran = w;
            return p;
        }
    }
    return std::nullopt;
}

}  // namespace graphalg
