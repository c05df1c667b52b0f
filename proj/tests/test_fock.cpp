#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "graphalg/fock.hpp"
#include "graphalg/linalg.hpp"
#include "graphalg/rng.hpp"
#include "testutil.hpp"

using namespace graphalg;

namespace {

Graph two_loop_graph() {
    return Graph({"v"}, {{"e1", "v", "v", Mult::finite(1)},
                         {"e2", "v", "v", Mult::finite(1)}});
}

ModuleElement random_element(Rng& rng, const Graph& g, std::size_t level) {
    ModuleElement xi;
    xi.level = level;
    xi.values.resize(path_space(g, level).size());
    for (auto& v : xi.values) v = rng.box();
    return xi;
}

}  // namespace

TEST_CASE("basis layout") {
    const Graph g = two_loop_graph();
    const FockBasis b = build_truncated_fock(g, 3);
    CHECK(b.depth() == 3);
    CHECK(b.dim() == 1 + 2 + 4 + 8);
    for (std::size_t n = 0; n <= 3; ++n) {
        CHECK(b.level_size(n) == path_space(g, n).size());
        CHECK(b.level(n) == path_space(g, n));
    }
    CHECK(b.level_offset(0) == 0);
    CHECK(b.level_offset(3) == 7);
    CHECK(b.level_of(0) == 0);
    CHECK(b.level_of(6) == 2);
    CHECK(b.level_of(7) == 3);
    CHECK(b.path_at(1).str() == "(e1)");
    CHECK(b.index_of(1, "(e2)") == 2);
    CHECK(b.index_of(2, "(e1,e1)") == 3);
    CHECK(b.index_of(2, "(e2,e1)") == 4);  // traversal [e1,e2]
    CHECK(b.index_of(2, "(zz)") == FockBasis::npos);

    // multiplicities expand into the basis
    const Graph m({"a"}, {{"e", "a", "a", Mult::finite(3)}});
    CHECK(build_truncated_fock(m, 2).dim() == 1 + 3 + 9);

    CHECK_THROWS_AS(build_truncated_fock(g, 20, 100), std::length_error);
    const Graph om({"a"}, {{"e", "a", "a", Mult::omega()}});
    CHECK_THROWS_AS(build_truncated_fock(om, 1), std::invalid_argument);
}

TEST_CASE("diagonal action and creation entries") {
    const Graph g({"a", "b"}, {{"e", "a", "b", Mult::finite(1)},
                               {"f", "b", "a", Mult::finite(1)}});
    const FockBasis b = build_truncated_fock(g, 2);
    // basis: a, b, (e), (f), (f,e), (e,f)
    VertexFunction fn{{cplx(2.0, 0.0), cplx(0.0, 3.0)}};
    const CMatrix d = sigma0(b, fn);
    CHECK(d.at(0, 0) == cplx(2.0, 0.0));   // ran(a) = a
    CHECK(d.at(2, 2) == cplx(0.0, 3.0));   // ran(e) = b
    CHECK(d.at(4, 4) == cplx(2.0, 0.0));   // ran((f,e)) = a
    CHECK(d.at(2, 3) == 0.0);

    // creation by delta_e sends a -> (e), (f) -> (e,f), kills level 2
    const CMatrix s = sigma1(b, delta_path(g, 1, "e"));
    CHECK(s.at(2, 0) == 1.0);
    CHECK(s.at(5, 3) == 1.0);
    double col_level2 = 0.0;
    for (std::size_t i = 0; i < b.dim(); ++i)
        col_level2 += std::abs(s.at(i, 4)) + std::abs(s.at(i, 5));
    CHECK(col_level2 == 0.0);
}

TEST_CASE("t_n generalizes sigma0 and sigma1") {
    Rng rng(307);
    const Graph g = two_loop_graph();
    const FockBasis b = build_truncated_fock(g, 3);

    const auto xi1 = random_element(rng, g, 1);
    CHECK((t_n(b, xi1) - sigma1(b, xi1)).max_abs() == 0.0);

    VertexFunction f{{rng.box()}};
    ModuleElement xi0{0, f.values};
    CHECK((t_n(b, xi0) - sigma0(b, f)).max_abs() == 0.0);

    ModuleElement deep{4, std::vector<cplx>(16, 1.0)};
    CHECK_THROWS_AS(t_n(b, deep), std::invalid_argument);
}

TEST_CASE("creation factors through tensor products") {
    Rng rng(311);
    testutil::GraphSpec spec;
    spec.max_vertices = 3;
    spec.max_edges = 5;
    spec.max_mult = 2;
    for (int rep = 0; rep < 20; ++rep) {
        const Graph g = testutil::random_graph(rng, spec);
        if (testutil::path_count_oracle(g, 3) > 200) continue;
        const FockBasis b = build_truncated_fock(g, 3);
        const auto xi = random_element(rng, g, 2);
        const auto eta = random_element(rng, g, 1);
        if (xi.values.empty() || eta.values.empty()) continue;

        // t^3(xi (x) eta) = t^2(xi) t^1(eta), exactly
        const auto prod = tensor_product(b, xi, eta);
        CHECK(prod.level == 3);
        const CMatrix lhs = t_n(b, prod);
        const CMatrix rhs = t_n(b, xi) * t_n(b, eta);
        CHECK((lhs - rhs).max_abs() < 1e-13);

        // phi_n(theta_{xi,xi'}) = t^n(xi) t^n(xi')*, exactly
        const auto xi2 = random_element(rng, g, 2);
        const CMatrix pl = phi_n(b, theta_op(g, xi, xi2));
        const CMatrix pr = t_n(b, xi) * t_n(b, xi2).adjoint();
        CHECK((pl - pr).max_abs() < 1e-13);

        // contraction: t^2(xi)* t^3(eta3) = t^1(contract(xi, eta3))
        const auto eta3 = random_element(rng, g, 3);
        const auto z = contract(b, xi, eta3);
        CHECK(z.level == 1);
        const CMatrix cl = t_n(b, xi).adjoint() * t_n(b, eta3);
        const CMatrix cr = t_n(b, z);
        CHECK(compressed_residual(b, cl, cr, 1) < 1e-12);
    }
}

TEST_CASE("isometry relation holds under compression and fails at the rim") {
    const Graph g = two_loop_graph();
    const FockBasis b = build_truncated_fock(g, 3);
    const auto xi = delta_path(g, 1, "e1");

    const CMatrix s = sigma1(b, xi);
    const CMatrix lhs = s.adjoint() * s;
    const CMatrix rhs = sigma0(b, inner_product(g, xi, xi));
    CHECK(compressed_residual(b, lhs, rhs, b.depth() - 1) == 0.0);
    // the truncation is visible at level N: creation kills it
    CHECK((lhs - rhs).max_abs() == 1.0);
}

TEST_CASE("defect of the truncated pair is a level-0 rank-one sum") {
    const Graph g = two_loop_graph();
    const FockBasis b = build_truncated_fock(g, 3);
    const auto chk = ck_defect_check(b, delta_vertex(g, "v"));
    CHECK(chk.pass);
    CHECK(chk.residual_vs_theta == 0.0);
    CHECK(chk.off_level0_max == 0.0);
    CHECK(chk.defect.at(0, 0) == 1.0);

    // support off the regular vertices is rejected
    const Graph chain({"a", "b"}, {{"e", "a", "b", Mult::finite(1)}});
    const FockBasis cb = build_truncated_fock(chain, 2);
    CHECK_THROWS_AS(ck_defect_check(cb, delta_vertex(chain, "a")),
                    std::invalid_argument);
    CHECK(ck_defect_check(cb, delta_vertex(chain, "b")).pass);
}

TEST_CASE("gauge action composes and fixes degree zero") {
    Rng rng(313);
    const Graph g = two_loop_graph();
    const FockBasis b = build_truncated_fock(g, 3);

    CMatrix a(b.dim(), b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) a.at(i, j) = rng.box();

    const cplx z = std::polar(1.0, 2.0 * rng.uniform());
    const cplx w = std::polar(1.0, -1.3);
    const CMatrix two = gauge_apply(b, z, gauge_apply(b, w, a));
    const CMatrix one = gauge_apply(b, z * w, a);
    CHECK((two - one).max_abs() < 1e-13);
    CHECK((gauge_apply(b, 1.0, a) - a).max_abs() == 0.0);
    CHECK_THROWS_AS(gauge_apply(b, cplx(0.5, 0.0), a), std::invalid_argument);

    // degree scaling: beta_z(sigma1(xi)) = z sigma1(xi)
    const auto xi = random_element(rng, g, 1);
    const CMatrix s = sigma1(b, xi);
    CHECK((gauge_apply(b, z, s) - s * z).max_abs() < 1e-13);

    // degree zero is fixed up to |z^l|^2 rounding
    VertexFunction f{{rng.box()}};
    const CMatrix d = sigma0(b, f);
    CHECK((gauge_apply(b, z, d) - d).max_abs() < 1e-14);
}

TEST_CASE("conditional expectation kills every nonzero degree") {
    Rng rng(317);
    const Graph g({"a", "b"}, {{"e1", "a", "b", Mult::finite(1)},
                               {"e2", "b", "a", Mult::finite(1)},
                               {"e3", "a", "a", Mult::finite(1)}});
    const FockBasis b = build_truncated_fock(g, 3);

    const auto xi = random_element(rng, g, 1);
    const CMatrix s = sigma1(b, xi);
    CHECK(conditional_expectation(b, s).max_abs() < 1e-12);

    VertexFunction f{{rng.box(), rng.box()}};
    const CMatrix d = sigma0(b, f);
    CHECK((conditional_expectation(b, d) - d).max_abs() < 1e-12);

    // mixed element: expectation keeps exactly the degree-0 part
    const CMatrix mixed = d + s + s.adjoint() * cplx(0.0, 2.0);
    const CMatrix e1 = conditional_expectation(b, mixed);
    CHECK((e1 - d).max_abs() < 1e-12);
    // idempotent
    CHECK((conditional_expectation(b, e1) - e1).max_abs() < 1e-12);
    // contractive in operator norm
    CHECK(operator_norm(e1) <= operator_norm(mixed) + 1e-10);
}

TEST_CASE("single-map graphs satisfy the shift identities") {
    // 3-cycle permutation
    const Graph perm = from_dynamical_system(
        {"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"z", "x"}});
    const FockBasis pb = build_truncated_fock(perm, 4);
    const auto pc = dyn_isometry_check(pb, 1e-12);
    CHECK(pc.pass);
    CHECK(pc.isometry_residual == 0.0);
    CHECK(pc.covariance_residual == 0.0);

    // non-injective map
    const Graph fold = from_dynamical_system(
        {"x", "y"}, {{"x", "x"}, {"y", "x"}});
    const FockBasis fb = build_truncated_fock(fold, 4);
    CHECK(dyn_isometry_check(fb, 1e-12).pass);

    // branching graph is rejected
    const FockBasis ob = build_truncated_fock(two_loop_graph(), 2);
    CHECK_THROWS_AS(dyn_isometry_check(ob, 1e-12), std::invalid_argument);
}

TEST_CASE("relation suite passes on pinned graphs at every depth") {
    const Graph o2 = two_loop_graph();
    for (std::size_t depth : {1u, 2u, 3u, 4u}) {
        const FockBasis b = build_truncated_fock(o2, depth);
        const auto res = fock_relation_suite(b, 1, 1e-9);
        CHECK(res.pass);
        CHECK(res.depth == depth);
        for (const auto& r : res.relations) {
            INFO(r.name, " depth ", depth, " residual ", r.residual);
            CHECK(r.pass);
        }
    }

    // graph with a source, a sink, multiplicity, and a cycle
    const Graph mixed({"s", "v", "w"}, {{"e1", "s", "v", Mult::finite(2)},
                                        {"e2", "v", "w", Mult::finite(1)},
                                        {"e3", "w", "v", Mult::finite(1)}});
    const auto res = fock_relation_suite(build_truncated_fock(mixed, 4), 7, 1e-9);
    CHECK(res.pass);
}

TEST_CASE("relation suite passes on random graphs") {
    Rng rng(331);
    testutil::GraphSpec spec;
    spec.max_vertices = 4;
    spec.max_edges = 6;
    spec.max_mult = 2;
    int run = 0;
    for (int rep = 0; rep < 60 && run < 12; ++rep) {
        const Graph g = testutil::random_graph(rng, spec);
        if (g.num_edges() == 0) continue;
        if (testutil::path_count_oracle(g, 3) > 150) continue;
        const auto res =
            fock_relation_suite(build_truncated_fock(g, 3), 1 + rep, 1e-9);
        for (const auto& r : res.relations) {
            INFO(r.name, " residual ", r.residual, " tol ", r.tolerance);
            CHECK(r.pass);
        }
        ++run;
    }
    CHECK(run == 12);
}
