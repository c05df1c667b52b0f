#include "graphalg/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "graphalg/hilbert.hpp"
#include "graphalg/linalg.hpp"

namespace graphalg {

namespace {

// Validates shapes and key coverage; returns the expanded graph the family
// is matched against.
Graph checked_expansion(const Graph& g, const OperatorFamily& fam) {
    if (g.has_infinite_mult())
        throw std::invalid_argument(
            "family checks require finite multiplicities");
    Graph ex = g.expanded();
    if (fam.space_dim == 0)
        throw std::invalid_argument("family space_dim must be positive");
    auto check = [&](const CMatrix& m, const std::string& what) {
        if (m.rows() != fam.space_dim || m.cols() != fam.space_dim)
            throw std::invalid_argument("family matrix for " + what +
                                        " does not match space_dim");
    };
    for (const auto& v : ex.vertices()) {
        auto it = fam.P.find(v);
        if (it == fam.P.end())
            throw std::invalid_argument("family has no P matrix for vertex " + v);
        check(it->second, "vertex " + v);
    }
    if (fam.P.size() != ex.num_vertices())
        throw std::invalid_argument("family has P matrices for unknown vertices");
    for (const auto& e : ex.edges()) {
        auto it = fam.S.find(e.id);
        if (it == fam.S.end())
            throw std::invalid_argument("family has no S matrix for edge " + e.id);
        check(it->second, "edge " + e.id);
    }
    if (fam.S.size() != ex.num_edges())
        throw std::invalid_argument("family has S matrices for unknown edges");
    return ex;
}

CheckReport toeplitz_report(const Graph& ex, const OperatorFamily& fam,
                            double tol) {
    CheckReport rep;
    rep.tolerance = tol;
    rep.injective = true;

    double projections = 0.0;
    for (const auto& v : ex.vertices()) {
        const CMatrix& p = fam.P.at(v);
        if (p.max_abs() == 0.0) rep.injective = false;
        projections = std::max(projections, operator_norm(p.adjoint() - p));
        projections = std::max(projections, operator_norm(p * p - p));
        for (const auto& w : ex.vertices()) {
            if (w == v) continue;
            projections = std::max(projections, operator_norm(p * fam.P.at(w)));
        }
    }

    double isometry = 0.0, orthogonality = 0.0, range_support = 0.0;
    for (const auto& e : ex.edges()) {
        const CMatrix& s = fam.S.at(e.id);
        isometry = std::max(isometry,
                            operator_norm(s.adjoint() * s - fam.P.at(e.dom)));
        range_support = std::max(range_support,
                                 operator_norm(fam.P.at(e.ran) * s - s));
        for (const auto& f : ex.edges()) {
            if (f.id == e.id) continue;
            orthogonality = std::max(
                orthogonality, operator_norm(s.adjoint() * fam.S.at(f.id)));
        }
    }

    rep.pass = true;
    auto add = [&](const std::string& name, double res) {
        rep.relations.push_back({name, res, tol, res <= tol});
        rep.pass = rep.pass && res <= tol;
    };
    add("projections", projections);
    add("isometry", isometry);
    add("orthogonality", orthogonality);
    add("range_support", range_support);
    return rep;
}

}  // namespace

CheckReport verify_toeplitz_family(const Graph& g, const OperatorFamily& fam,
                                   double tol) {
    const Graph ex = checked_expansion(g, fam);
    return toeplitz_report(ex, fam, tol);
}

CheckReport verify_ck_family(const Graph& g, const OperatorFamily& fam,
                             double tol) {
    const Graph ex = checked_expansion(g, fam);
    CheckReport rep = toeplitz_report(ex, fam, tol);

    const auto cls = classify_vertices(ex);
    double fullness = 0.0;
    for (const auto& v : cls.rg) {
        CMatrix sum(fam.space_dim, fam.space_dim);
        for (const auto& e : ex.edges())
            if (e.ran == v) sum += fam.S.at(e.id) * fam.S.at(e.id).adjoint();
        fullness = std::max(fullness, operator_norm(fam.P.at(v) - sum));
    }
    rep.relations.push_back({"fullness", fullness, tol, fullness <= tol});
    rep.pass = rep.pass && fullness <= tol;
    return rep;
}

OperatorFamily fock_family(const FockBasis& b) {
    const Graph& g = b.graph();
    OperatorFamily fam;
    fam.space_dim = b.dim();
    for (const auto& v : g.vertices())
        fam.P.emplace(v, sigma0(b, delta_vertex(g, v)));
    for (const auto& e : g.edges())
        fam.S.emplace(e.id, sigma1(b, delta_path(g, 1, e.id)));
    return fam;
}

}  // namespace graphalg
