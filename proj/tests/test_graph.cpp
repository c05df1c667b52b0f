#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "graphalg/graph.hpp"
#include "graphalg/rng.hpp"
#include "testutil.hpp"

using namespace graphalg;

TEST_CASE("multiplicity type") {
    CHECK(Mult::finite(3).count() == 3);
    CHECK(Mult::finite(1).str() == "1");
    CHECK(Mult::omega().is_omega());
    CHECK(Mult::omega().str() == "inf");
    CHECK_THROWS_AS(Mult::finite(0), std::invalid_argument);
    CHECK_THROWS_AS(Mult::omega().count(), std::logic_error);
}

TEST_CASE("construction canonicalizes vertices and edges") {
    const Graph g({"b", "a", "c"},
                  {{"e2", "b", "a", Mult::finite(1)},
                   {"e1", "a", "c", Mult::finite(2)}});
    CHECK(g.vertices() == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.edge(0).id == "e1");
    CHECK(g.edge(1).id == "e2");
    CHECK(g.vertex_index("b") == 1);
    CHECK(g.edge_index("e2") == 1);
    CHECK_THROWS_AS(g.vertex_index("zz"), std::invalid_argument);
    CHECK_THROWS_AS(g.edge_index("zz"), std::invalid_argument);
}

TEST_CASE("construction rejects malformed input") {
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({""}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a"}, {{"e", "a", "zz", Mult::finite(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Graph({"a"}, {{"e", "a", "a", Mult::finite(1)},
                                  {"e", "a", "a", Mult::finite(1)}}),
                    std::invalid_argument);
}

TEST_CASE("classification of a hand-built graph") {
    // s -> v, v -> v, omega edge w => u; t isolated.
    const Graph g({"s", "t", "u", "v", "w"},
                  {{"e1", "s", "v", Mult::finite(1)},
                   {"e2", "v", "v", Mult::finite(1)},
                   {"e3", "w", "u", Mult::omega()}});
    const auto cls = classify_vertices(g);
    CHECK(cls.sce == std::vector<std::string>{"s", "t", "w"});
    CHECK(cls.fin == std::vector<std::string>{"s", "t", "v", "w"});
    CHECK(cls.inf == std::vector<std::string>{"u"});
    CHECK(cls.rg == std::vector<std::string>{"v"});
    CHECK(cls.sg == std::vector<std::string>{"s", "t", "u", "w"});
}

TEST_CASE("classification partitions hold on random graphs") {
    Rng rng(41);
    testutil::GraphSpec spec;
    spec.max_vertices = 8;
    spec.max_edges = 16;
    spec.omega_prob = 0.15;
    for (int rep = 0; rep < 200; ++rep) {
        const Graph g = testutil::random_graph(rng, spec);
        const auto cls = classify_vertices(g);

        // rg = fin \ sce and sg is the complement of rg.
        std::set<std::string> fin(cls.fin.begin(), cls.fin.end());
        std::set<std::string> sce(cls.sce.begin(), cls.sce.end());
        std::set<std::string> rg_expect;
        for (const auto& v : fin)
            if (!sce.count(v)) rg_expect.insert(v);
        CHECK(std::set<std::string>(cls.rg.begin(), cls.rg.end()) == rg_expect);

        std::set<std::string> all(g.vertices().begin(), g.vertices().end());
        std::set<std::string> rg_sg(cls.rg.begin(), cls.rg.end());
        rg_sg.insert(cls.sg.begin(), cls.sg.end());
        CHECK(rg_sg == all);
        CHECK(cls.rg.size() + cls.sg.size() == g.num_vertices());

        // inf and fin partition the vertex set; sources receive nothing.
        std::set<std::string> inf(cls.inf.begin(), cls.inf.end());
        for (const auto& v : g.vertices())
            CHECK((fin.count(v) + inf.count(v)) == 1);
        for (const auto& e : g.edges()) CHECK_FALSE(sce.count(e.ran));
    }
}

TEST_CASE("expansion splits multiplicities into numbered copies") {
    const Graph g({"a"}, {{"e", "a", "a", Mult::finite(3)},
                          {"f", "a", "a", Mult::finite(1)}});
    CHECK_FALSE(g.is_expanded());
    CHECK(g.edge_total() == 4);
    const Graph ex = g.expanded();
    CHECK(ex.is_expanded());
    std::vector<std::string> ids;
    for (const auto& e : ex.edges()) ids.push_back(e.id);
    CHECK(ids == std::vector<std::string>{"e#1", "e#2", "e#3", "f"});
    for (const auto& e : ex.edges()) CHECK(e.mult.count() == 1);
}

TEST_CASE("omega multiplicity blocks expansion and totals") {
    const Graph g({"a"}, {{"e", "a", "a", Mult::omega()}});
    CHECK(g.has_infinite_mult());
    CHECK_THROWS_AS(g.expanded(), std::invalid_argument);
    CHECK_THROWS_AS(g.edge_total(), std::logic_error);
}

TEST_CASE("opposite graph swaps domain and range") {
    const Graph g({"a", "b"}, {{"e", "a", "b", Mult::finite(2)}});
    const Graph op = opposite_graph(g);
    CHECK(op.edge(0).dom == "b");
    CHECK(op.edge(0).ran == "a");
    CHECK(op.edge(0).mult == Mult::finite(2));
    // involution
    const Graph opop = opposite_graph(op);
    CHECK(opop.edge(0).dom == "a");
    CHECK(opop.edge(0).ran == "b");
}

TEST_CASE("graph of a dynamical system") {
    const Graph g = from_dynamical_system(
        {"p", "q", "r"}, {{"p", "q"}, {"q", "p"}, {"r", "r"}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    for (const auto& e : g.edges()) CHECK(e.id == e.dom);
    CHECK(g.edge(g.edge_index("p")).ran == "q");
    CHECK(g.edge(g.edge_index("r")).ran == "r");

    CHECK_THROWS_AS(from_dynamical_system({"p", "q"}, {{"p", "q"}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(from_dynamical_system({"p"}, {{"p", "missing"}}),
                    std::invalid_argument);
}
