#include "graphalg/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "graphalg/linalg.hpp"
#include "graphalg/rng.hpp"

namespace graphalg {

namespace {

// Display key of an edge-id sequence located at a vertex: mirrors Path::str().
std::string key_of(const std::vector<std::string>& edges,
                   const std::string& vertex_if_empty) {
    if (edges.empty()) return vertex_if_empty;
    std::string s = "(";
    for (std::size_t i = edges.size(); i-- > 0;) {
        s += edges[i];
        if (i > 0) s += ",";
    }
    return s + ")";
}

// Key of the leading (range-end) n edges of w.
std::string lead_key(const Path& w, std::size_t n) {
    if (n == 0) return w.ran;
    std::vector<std::string> sub(w.edge_ids.end() - n, w.edge_ids.end());
    return key_of(sub, "");
}

// Key of the remaining k-n trailing edges of w (n = lead length).
std::string tail_key(const Path& w, std::size_t n) {
    const std::size_t k = w.level();
    if (k == n) return w.dom;
    std::vector<std::string> sub(w.edge_ids.begin(), w.edge_ids.end() - n);
    return key_of(sub, "");
}

// Out-edges of the expanded graph keyed by domain vertex, canonical order.
std::map<std::string, std::vector<const EdgeRecord*>> out_edges(const Graph& ex) {
    std::map<std::string, std::vector<const EdgeRecord*>> m;
    for (const auto& e : ex.edges()) m[e.dom].push_back(&e);
    return m;
}

// Level-n paths bucketed by domain vertex: local positions in canonical order.
std::map<std::string, std::vector<std::size_t>> paths_by_dom(
    const std::vector<Path>& lvl) {
    std::map<std::string, std::vector<std::size_t>> m;
    for (std::size_t i = 0; i < lvl.size(); ++i) m[lvl[i].dom].push_back(i);
    return m;
}

void check_element(const FockBasis& b, const ModuleElement& xi) {
    if (xi.level > b.depth())
        throw std::invalid_argument("module element level exceeds basis depth");
    if (xi.values.size() != b.level_size(xi.level))
        throw std::invalid_argument("module element size does not match path space");
}

void check_operator_shape(const FockBasis& b, const CMatrix& a) {
    if (a.rows() != b.dim() || a.cols() != b.dim())
        throw std::invalid_argument("operator dimension does not match basis");
}

}  // namespace

std::size_t FockBasis::level_of(std::size_t index) const {
    for (std::size_t n = 0; n + 1 < offsets_.size(); ++n)
        if (index < offsets_[n + 1]) return n;
    throw std::out_of_range("basis index out of range");
}

const Path& FockBasis::path_at(std::size_t index) const {
    const std::size_t n = level_of(index);
    return levels_[n][index - offsets_[n]];
}

std::size_t FockBasis::index_of(std::size_t level, const std::string& key) const {
    if (level >= pos_.size()) return npos;
    auto it = pos_[level].find(key);
    if (it == pos_[level].end()) return npos;
    return offsets_[level] + it->second;
}

FockBasis build_truncated_fock(const Graph& g, std::size_t depth,
                               std::size_t max_dim) {
    FockBasis b;
    b.graph_ = g.expanded();
    b.depth_ = depth;

    const auto out = out_edges(b.graph_);
    std::size_t total = 0;
    auto push_level = [&](std::vector<Path> lvl) {
        total += lvl.size();
        if (total > max_dim)
            throw std::length_error(
                "truncated Fock dimension exceeds the cap of " +
                std::to_string(max_dim));
        b.levels_.push_back(std::move(lvl));
    };

    std::vector<Path> cur;
    for (const auto& v : b.graph_.vertices()) cur.push_back({{}, v, v});
    push_level(cur);
    if (depth >= 1) {
        // Level 1 is the canonical edge list itself; extending level 0 would
        // order by domain vertex first and break the lexicographic order.
        std::vector<Path> lvl1;
        for (const auto& e : b.graph_.edges())
            lvl1.push_back({{e.id}, e.dom, e.ran});
        push_level(std::move(lvl1));
    }
    for (std::size_t n = 2; n <= depth; ++n) {
        std::vector<Path> next;
        for (const auto& p : b.levels_[n - 1]) {
            auto it = out.find(p.ran);
            if (it == out.end()) continue;
            for (const EdgeRecord* e : it->second) {
                Path q = p;
                q.edge_ids.push_back(e->id);
                q.ran = e->ran;
                next.push_back(std::move(q));
                if (total + next.size() > max_dim)
                    throw std::length_error(
                        "truncated Fock dimension exceeds the cap of " +
                        std::to_string(max_dim));
            }
        }
        push_level(std::move(next));
    }

    b.offsets_.assign(depth + 2, 0);
    for (std::size_t n = 0; n <= depth; ++n)
        b.offsets_[n + 1] = b.offsets_[n] + b.levels_[n].size();
    b.pos_.resize(depth + 1);
    for (std::size_t n = 0; n <= depth; ++n)
        for (std::size_t i = 0; i < b.levels_[n].size(); ++i)
            b.pos_[n][b.levels_[n][i].str()] = i;
    return b;
}

CMatrix sigma0(const FockBasis& b, const VertexFunction& f) {
    if (f.values.size() != b.graph().num_vertices())
        throw std::invalid_argument("VertexFunction size does not match vertex count");
    CMatrix m(b.dim(), b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i)
        m.at(i, i) = f.values[b.graph().vertex_index(b.path_at(i).ran)];
    return m;
}

CMatrix sigma1(const FockBasis& b, const ModuleElement& xi) {
    if (xi.level != 1)
        throw std::invalid_argument("sigma1: element must have level 1");
    if (xi.values.size() != b.graph().num_edges())
        throw std::invalid_argument("sigma1: element size does not match edge count");
    CMatrix m(b.dim(), b.dim());
    const auto out = out_edges(b.graph());
    for (std::size_t k = 0; k < b.depth(); ++k) {
        const auto& lvl = b.level(k);
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            const Path& p = lvl[i];
            const std::size_t col = b.level_offset(k) + i;
            auto it = out.find(p.ran);
            if (it == out.end()) continue;
            for (const EdgeRecord* e : it->second) {
                auto ids = p.edge_ids;
                ids.push_back(e->id);
                const std::size_t row = b.index_of(k + 1, key_of(ids, p.dom));
                m.at(row, col) += xi.values[b.edge_position(e->id)];
            }
        }
    }
    return m;
}

CMatrix t_n(const FockBasis& b, const ModuleElement& xi) {
    check_element(b, xi);
    const std::size_t n = xi.level;
    if (n == 0) return sigma0(b, VertexFunction{xi.values});
    CMatrix m(b.dim(), b.dim());
    const auto by_dom = paths_by_dom(b.level(n));
    for (std::size_t k = 0; k + n <= b.depth(); ++k) {
        const auto& lvl = b.level(k);
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            const Path& p = lvl[i];
            const std::size_t col = b.level_offset(k) + i;
            auto it = by_dom.find(p.ran);
            if (it == by_dom.end()) continue;
            for (std::size_t qpos : it->second) {
                const Path& q = b.level(n)[qpos];
                auto ids = p.edge_ids;
                ids.insert(ids.end(), q.edge_ids.begin(), q.edge_ids.end());
                const std::size_t row = b.index_of(k + n, key_of(ids, p.dom));
                m.at(row, col) += xi.values[qpos];
            }
        }
    }
    return m;
}

CMatrix phi_n(const FockBasis& b, const ModuleOperator& x) {
    const std::size_t n = x.level;
    if (n > b.depth())
        throw std::invalid_argument("phi_n: operator level exceeds basis depth");
    if (x.mat.rows() != b.level_size(n) || x.mat.cols() != b.level_size(n))
        throw std::invalid_argument("phi_n: operator dimension does not match level");
    CMatrix m(b.dim(), b.dim());
    const auto& lvln = b.level(n);
    for (std::size_t k = n; k <= b.depth(); ++k) {
        const auto& lvl = b.level(k);
        for (std::size_t i = 0; i < lvl.size(); ++i) {
            const Path& w = lvl[i];
            const std::size_t col = b.level_offset(k) + i;
            const std::size_t qc = b.index_of(n, lead_key(w, n)) - b.level_offset(n);
            std::vector<std::string> tail(w.edge_ids.begin(),
                                          w.edge_ids.end() - n);
            for (std::size_t qr = 0; qr < lvln.size(); ++qr) {
                const cplx val = x.mat.at(qr, qc);
                if (val == cplx(0.0)) continue;
                if (lvln[qr].dom != lvln[qc].dom) continue;  // not composable
                auto ids = tail;
                ids.insert(ids.end(), lvln[qr].edge_ids.begin(),
                           lvln[qr].edge_ids.end());
                const std::size_t row =
                    b.index_of(k, key_of(ids, w.dom));
                m.at(row, col) += val;
            }
        }
    }
    return m;
}

ModuleElement tensor_product(const FockBasis& b, const ModuleElement& xi,
                             const ModuleElement& eta) {
    const std::size_t n = xi.level, mlev = eta.level;
    if (n + mlev > b.depth())
        throw std::invalid_argument("tensor_product: level sum exceeds depth");
    check_element(b, xi);
    check_element(b, eta);
    const std::size_t k = n + mlev;
    ModuleElement out{k, std::vector<cplx>(b.level_size(k), cplx(0.0))};
    for (std::size_t i = 0; i < b.level_size(k); ++i) {
        const Path& w = b.level(k)[i];
        const std::size_t qi = b.index_of(n, lead_key(w, n)) - b.level_offset(n);
        const std::size_t pi = b.index_of(mlev, tail_key(w, n)) - b.level_offset(mlev);
        out.values[i] = xi.values[qi] * eta.values[pi];
    }
    return out;
}

ModuleElement contract(const FockBasis& b, const ModuleElement& xi,
                       const ModuleElement& eta) {
    if (!(xi.level < eta.level))
        throw std::invalid_argument("contract: requires xi.level < eta.level");
    check_element(b, xi);
    check_element(b, eta);
    const std::size_t n = xi.level, mlev = eta.level, k = mlev - n;
    ModuleElement out{k, std::vector<cplx>(b.level_size(k), cplx(0.0))};
    const auto by_dom = paths_by_dom(b.level(n));
    for (std::size_t i = 0; i < b.level_size(k); ++i) {
        const Path& e = b.level(k)[i];
        auto it = by_dom.find(e.ran);
        if (it == by_dom.end()) continue;
        cplx acc(0.0);
        for (std::size_t qpos : it->second) {
            const Path& q = b.level(n)[qpos];
            auto ids = e.edge_ids;
            ids.insert(ids.end(), q.edge_ids.begin(), q.edge_ids.end());
            const std::size_t widx = b.index_of(mlev, key_of(ids, e.dom));
            acc += std::conj(xi.values[qpos]) *
                   eta.values[widx - b.level_offset(mlev)];
        }
        out.values[i] = acc;
    }
    return out;
}

ModuleElement apply_module_operator(const ModuleOperator& x,
                                    const ModuleElement& xi) {
    if (x.level != xi.level)
        throw std::invalid_argument("apply_module_operator: level mismatch");
    if (x.mat.cols() != xi.values.size())
        throw std::invalid_argument("apply_module_operator: size mismatch");
    ModuleElement out{xi.level, std::vector<cplx>(x.mat.rows(), cplx(0.0))};
    for (std::size_t r = 0; r < x.mat.rows(); ++r) {
        cplx acc(0.0);
        for (std::size_t c = 0; c < x.mat.cols(); ++c)
            acc += x.mat.at(r, c) * xi.values[c];
        out.values[r] = acc;
    }
    return out;
}

CMatrix level_compression(const FockBasis& b, std::size_t max_level) {
    CMatrix q(b.dim(), b.dim());
    const std::size_t cut = b.level_offset(std::min(max_level, b.depth()) + 1);
    for (std::size_t i = 0; i < cut; ++i) q.at(i, i) = 1.0;
    return q;
}

double compressed_residual(const FockBasis& b, const CMatrix& a,
                           const CMatrix& target, std::size_t max_level) {
    check_operator_shape(b, a);
    check_operator_shape(b, target);
    CMatrix d = a - target;
    const std::size_t cut = b.level_offset(std::min(max_level, b.depth()) + 1);
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < b.dim(); ++c)
            if (r >= cut || c >= cut) d.at(r, c) = 0.0;
    return operator_norm(d);
}

DefectCheck ck_defect_check(const FockBasis& b, const VertexFunction& f) {
    const Graph& g = b.graph();
    if (f.values.size() != g.num_vertices())
        throw std::invalid_argument("VertexFunction size does not match vertex count");
    const auto cls = classify_vertices(g);
    const std::set<std::string> rg(cls.rg.begin(), cls.rg.end());
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
        if (f.values[i] != cplx(0.0) && !rg.count(g.vertices()[i]))
            throw std::invalid_argument(
                "ck_defect_check: f is supported off the regular vertices");

    CMatrix defect = sigma0(b, f) - phi_n(b, pi_r(g, f, 1));

    // theta_{xi0, eta0} with xi0 = f and eta0 = indicator of supp f, as an
    // operator supported on the level-0 block.
    CMatrix theta(b.dim(), b.dim());
    const auto& lvl0 = b.level(0);
    for (std::size_t r = 0; r < lvl0.size(); ++r)
        for (std::size_t c = 0; c < lvl0.size(); ++c) {
            if (lvl0[r].dom != lvl0[c].dom) continue;
            const cplx eta0 = f.values[c] != cplx(0.0) ? cplx(1.0) : cplx(0.0);
            theta.at(r, c) = f.values[r] * std::conj(eta0);
        }

    DefectCheck out{defect, 0.0, 0.0, false};
    out.residual_vs_theta = (defect - theta).max_abs();
    const std::size_t cut = b.level_offset(1);
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < b.dim(); ++c)
            if (r >= cut || c >= cut)
                out.off_level0_max =
                    std::max(out.off_level0_max, std::abs(defect.at(r, c)));
    out.pass = out.residual_vs_theta <= 1e-12 && out.off_level0_max == 0.0;
    return out;
}

CMatrix gauge_apply(const FockBasis& b, cplx z, const CMatrix& a) {
    if (std::abs(std::abs(z) - 1.0) > 1e-12)
        throw std::invalid_argument("gauge_apply: |z| must be 1");
    check_operator_shape(b, a);
    std::vector<cplx> zpow(b.depth() + 1, cplx(1.0));
    for (std::size_t l = 1; l <= b.depth(); ++l) zpow[l] = zpow[l - 1] * z;
    std::vector<cplx> diag(b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) diag[i] = zpow[b.level_of(i)];
    CMatrix out(b.dim(), b.dim());
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < b.dim(); ++c)
            out.at(r, c) = diag[r] * a.at(r, c) * std::conj(diag[c]);
    return out;
}

CMatrix conditional_expectation(const FockBasis& b, const CMatrix& a) {
    check_operator_shape(b, a);
    const std::size_t m = 2 * b.depth() + 1;
    CMatrix acc(b.dim(), b.dim());
    for (std::size_t j = 0; j < m; ++j) {
        const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * double(j) / double(m));
        acc += gauge_apply(b, z, a);
    }
    return acc * cplx(1.0 / double(m), 0.0);
}

DynCheck dyn_isometry_check(const FockBasis& b, double tol) {
    const Graph& g = b.graph();
    if (b.depth() < 1)
        throw std::invalid_argument("dyn_isometry_check: depth must be at least 1");
    const auto out = out_edges(g);
    std::map<std::string, std::string> sig;
    for (const auto& v : g.vertices()) {
        auto it = out.find(v);
        if (it == out.end() || it->second.size() != 1)
            throw std::invalid_argument(
                "dyn_isometry_check: graph is not the graph of a map "
                "(every vertex needs exactly one outgoing edge)");
        sig[v] = it->second[0]->ran;
    }

    const ModuleElement one{1, std::vector<cplx>(g.num_edges(), cplx(1.0))};
    const CMatrix u = sigma1(b, one);
    const std::size_t top = b.depth() - 1;

    DynCheck r{0.0, 0.0, tol, false};
    r.isometry_residual = compressed_residual(
        b, u.adjoint() * u, CMatrix::identity(b.dim()), top);
    for (const auto& v : g.vertices()) {
        const VertexFunction dv = delta_vertex(g, v);
        VertexFunction dv_sigma = zero_vertex_function(g);
        for (std::size_t i = 0; i < g.num_vertices(); ++i)
            if (sig[g.vertices()[i]] == v) dv_sigma.values[i] = 1.0;
        r.covariance_residual = std::max(
            r.covariance_residual,
            compressed_residual(b, sigma0(b, dv) * u, u * sigma0(b, dv_sigma), top));
    }
    r.pass = r.isometry_residual <= tol && r.covariance_residual <= tol;
    return r;
}

namespace {

ModuleElement normalized(const Graph& g, ModuleElement e) {
    double n = module_norm(g, e);
    if (n > 0)
        for (auto& v : e.values) v /= n;
    return e;
}

}  // namespace

FockSuiteResult fock_relation_suite(const FockBasis& b, std::uint64_t seed,
                                    double tol) {
    const Graph& g = b.graph();
    const std::size_t depth = b.depth();
    if (depth < 1)
        throw std::invalid_argument("fock_relation_suite: depth must be at least 1");

    Rng rng(seed);
    auto rand_vf = [&] {
        VertexFunction f = zero_vertex_function(g);
        double m = 0.0;
        for (auto& v : f.values) {
            v = rng.box();
            m = std::max(m, std::abs(v));
        }
        if (m > 0)
            for (auto& v : f.values) v /= m;
        return f;
    };
    auto rand_el = [&](std::size_t lvl) {
        ModuleElement e{lvl, std::vector<cplx>(b.level_size(lvl))};
        for (auto& v : e.values) v = rng.box();
        return normalized(g, e);
    };

    const double exact = 1e-12;
    FockSuiteResult out{{}, true, depth, b.dim(), seed};
    auto add = [&](const std::string& name, double res, double tolr) {
        out.relations.push_back({name, res, tolr, res <= tolr});
        out.pass = out.pass && res <= tolr;
    };

    const VertexFunction f = rand_vf();
    const ModuleElement xi1 = rand_el(1), eta1 = rand_el(1);

    // Toeplitz axiom (i), compressed to levels <= N-1.
    add("toeplitz_i",
        compressed_residual(b, sigma1(b, xi1).adjoint() * sigma1(b, eta1),
                            sigma0(b, inner_product(g, xi1, eta1)), depth - 1),
        tol);
    // Toeplitz axiom (ii), exact on the whole truncation.
    add("toeplitz_ii",
        operator_norm(sigma0(b, f) * sigma1(b, xi1) -
                      sigma1(b, apply_module_operator(pi_r(g, f, 1), xi1))),
        tol);

    // t_n / phi_n operator identities at n = min(2, depth).
    const std::size_t n = std::min<std::size_t>(2, depth);
    const ModuleElement xin = rand_el(n), zetan = rand_el(n);
    const ModuleOperator x = theta_op(g, rand_el(n), rand_el(n));

    {
        // product rule: t_n(xi) t_m(eta) = t_{n+m}(xi (x) eta)
        const std::size_t m1 = depth >= 2 ? std::min<std::size_t>(depth - 1, 2) : 0;
        const ModuleElement eta_m =
            m1 == 0 ? ModuleElement{0, rand_vf().values} : rand_el(m1);
        add("tn_i",
            operator_norm(t_n(b, xi1) * t_n(b, eta_m) -
                          t_n(b, tensor_product(b, xi1, eta_m))),
            tol);
    }
    add("tn_ii",
        compressed_residual(b, t_n(b, zetan).adjoint() * t_n(b, xin),
                            sigma0(b, inner_product(g, zetan, xin)), depth - n),
        tol);
    add("tn_iii",
        operator_norm(sigma0(b, f) * t_n(b, xin) -
                      t_n(b, apply_module_operator(pi_r(g, f, n), xin))),
        tol);
    {
        const ModuleOperator pfx{n, pi_r(g, f, n).mat * x.mat};
        add("tn_iv",
            operator_norm(sigma0(b, f) * phi_n(b, x) - phi_n(b, pfx)), tol);
    }
    add("tn_v",
        operator_norm(phi_n(b, x) * t_n(b, xin) -
                      t_n(b, apply_module_operator(x, xin))),
        tol);

    {
        // adjoint contraction: t_n(xi)* t_m(eta) = t_{m-n}(zeta)
        const std::size_t nc = depth >= 2 ? 1 : 0;
        const std::size_t mc = depth >= 2 ? 2 : 1;
        const ModuleElement xc =
            nc == 0 ? ModuleElement{0, rand_vf().values} : rand_el(nc);
        const ModuleElement ec = rand_el(mc);
        add("contraction",
            compressed_residual(b, t_n(b, xc).adjoint() * t_n(b, ec),
                                t_n(b, contract(b, xc, ec)), depth - mc),
            tol);
    }

    {
        // defect identity at a random function on the regular vertices
        const auto cls = classify_vertices(g);
        const std::set<std::string> rg(cls.rg.begin(), cls.rg.end());
        VertexFunction frg = rand_vf();
        for (std::size_t i = 0; i < g.num_vertices(); ++i)
            if (!rg.count(g.vertices()[i])) frg.values[i] = 0.0;
        const auto dc = ck_defect_check(b, frg);
        add("defect", std::max(dc.residual_vs_theta, dc.off_level0_max), exact);
    }

    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    const CMatrix a1 = t_n(b, xin);
    const CMatrix a2 = sigma1(b, eta1).adjoint();
    add("gauge_multiplicative",
        operator_norm(gauge_apply(b, z, a1 * a2) -
                      gauge_apply(b, z, a1) * gauge_apply(b, z, a2)),
        exact);
    {
        // degree scaling: monomial of degree n-1 picks up z^{n-1}
        const CMatrix mono = a1 * a2;
        cplx zn(1.0);
        for (std::size_t i = 1; i < n; ++i) zn *= z;
        add("gauge_degree",
            operator_norm(gauge_apply(b, z, mono) - mono * zn), exact);
    }

    {
        const CMatrix m_eq = t_n(b, xin) * t_n(b, zetan).adjoint();   // degree 0
        const CMatrix m_ne = t_n(b, xin) * sigma1(b, eta1).adjoint();  // degree n-1
        double res = operator_norm(conditional_expectation(b, m_eq) - m_eq);
        if (n != 1)
            res = std::max(res, operator_norm(conditional_expectation(b, m_ne)));
        add("expectation_monomial", res, exact);

        const CMatrix poly = m_eq + m_ne + sigma0(b, f) + sigma1(b, xi1);
        const CMatrix psi = conditional_expectation(b, poly);
        add("expectation_idempotent",
            operator_norm(conditional_expectation(b, psi) - psi), exact);
        add("expectation_gauge_invariant",
            operator_norm(conditional_expectation(b, gauge_apply(b, z, poly)) - psi),
            exact);
        add("expectation_contractive",
            std::max(0.0, operator_norm(psi) - operator_norm(poly)), exact);
    }

    return out;
}

}  // namespace graphalg
