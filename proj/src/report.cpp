#include "graphalg/report.hpp"

#include <cinttypes>
#include <cstdio>
#include <stdexcept>

#include "graphalg/fock.hpp"
#include "graphalg/ktheory.hpp"
#include "graphalg/paths.hpp"

namespace graphalg {

namespace {

using nlohmann::json;

json mpz_json(const mpz_class& z) {
    // Numbers that fit in 64 bits stay numeric; anything larger degrades to
    // a decimal string rather than losing precision.
    if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

json classification_section(const Graph& g) {
    const auto cls = classify_vertices(g);
    return {{"sce", cls.sce}, {"fin", cls.fin}, {"inf", cls.inf},
            {"rg", cls.rg},   {"sg", cls.sg}};
}

json condition_l_section(const Graph& g) {
    const auto loops = cycles_without_entrances(g);
    json witnesses = json::array();
    for (const auto& l : loops)
        witnesses.push_back({{"base", l.base_point},
                             {"edges", l.path.edge_ids},
                             {"path", l.path.str()}});
    return {{"holds", loops.empty()}, {"witness_cycles", witnesses}};
}

json group_json(const AbelianGroupPresentation& p) {
    json factors = json::array();
    for (const auto& d : p.invariant_factors) factors.push_back(mpz_json(d));
    return {{"free_rank", p.free_rank},
            {"invariant_factors", factors},
            {"group", group_str(p)}};
}

json k_theory_section(const Graph& g) {
    const auto kg = k_groups(g);
    json basis = json::array();
    for (const auto& col : kg.k1_basis) {
        json vec = json::array();
        for (const auto& x : col) vec.push_back(mpz_json(x));
        basis.push_back(vec);
    }
    return {{"k0", group_json(kg.k0)},
            {"k1", group_json(kg.k1)},
            {"k1_basis", basis}};
}

json relations_json(const std::vector<RelationResult>& rels) {
    json out = json::array();
    for (const auto& r : rels)
        out.push_back({{"name", r.name},
                       {"residual", r.residual},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
    return out;
}

json fock_section(const Graph& g, const ReportOptions& opt) {
    const FockBasis b = build_truncated_fock(g, opt.depth, opt.max_dim);
    const auto suite = fock_relation_suite(b, opt.seed, opt.tol);
    json out = {{"depth", suite.depth},
                {"dim", suite.dim},
                {"seed", suite.seed},
                {"relations", relations_json(suite.relations)},
                {"pass", suite.pass}};

    // Graphs of a map get the isometry/covariance check as well.
    bool one_out_each = true;
    std::map<std::string, std::size_t> outdeg;
    for (const auto& e : b.graph().edges()) ++outdeg[e.dom];
    for (const auto& v : b.graph().vertices())
        one_out_each = one_out_each && outdeg[v] == 1;
    if (one_out_each) {
        const auto dyn = dyn_isometry_check(b, opt.tol);
        out["dynamical"] = {{"isometry_residual", dyn.isometry_residual},
                            {"covariance_residual", dyn.covariance_residual},
                            {"tolerance", dyn.tol},
                            {"pass", dyn.pass}};
        out["pass"] = suite.pass && dyn.pass;
    }
    return out;
}

json paths_section(const Graph& g, const ReportOptions& opt) {
    json levels = json::array();
    json counts = json::array();
    std::size_t total = 0;
    for (std::size_t n = 0; n <= opt.depth; ++n) {
        const auto ps = path_space(g, n);
        total += ps.size();
        if (total > opt.max_dim)
            throw std::length_error(
                "path listing exceeds the cap of " + std::to_string(opt.max_dim) +
                "; raise --max-dim or lower --depth");
        counts.push_back(ps.size());
        json lvl = json::array();
        for (const auto& p : ps) lvl.push_back(p.str());
        levels.push_back({{"level", n}, {"paths", lvl}});
    }
    return {{"depth", opt.depth}, {"counts", counts}, {"levels", levels}};
}

json family_section(const Graph& g, const ReportOptions& opt) {
    if (opt.family == nullptr)
        throw std::invalid_argument("check-family requires a family file");
    const CheckReport rep = verify_ck_family(g, *opt.family, opt.tol);
    bool toeplitz = true;
    for (const auto& r : rep.relations)
        if (r.name != "fullness") toeplitz = toeplitz && r.pass;
    return {{"relations", relations_json(rep.relations)},
            {"pass", rep.pass},
            {"toeplitz_pass", toeplitz},
            {"injective", rep.injective},
            {"tolerance", rep.tolerance}};
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

void render_relations(std::string& out, const json& rels) {
    for (const auto& r : rels) {
        std::string name = r["name"].get<std::string>();
        name.resize(28, ' ');
        out += "  " + name + fmt_double(r["residual"].get<double>()) +
               "  <= " + fmt_double(r["tolerance"].get<double>()) +
               (r["pass"].get<bool>() ? "  ok" : "  FAIL") + "\n";
    }
}

}  // namespace

Report generate_report(const std::string& command, const Graph& g,
                       const ReportOptions& options) {
    Report rep;
    json& doc = rep.doc;
    doc["command"] = command;
    doc["graph"] = {{"num_vertices", g.num_vertices()},
                    {"num_edges", g.num_edges()}};

    if (command == "analyze") {
        doc["classification"] = classification_section(g);
        doc["condition_l"] = condition_l_section(g);
        doc["k_theory"] = k_theory_section(g);
    } else if (command == "ktheory") {
        doc["k_theory"] = k_theory_section(g);
    } else if (command == "fock") {
        doc["fock"] = fock_section(g, options);
        rep.exit_code = doc["fock"]["pass"].get<bool>() ? 0 : 1;
    } else if (command == "paths") {
        doc["paths"] = paths_section(g, options);
    } else if (command == "check-family") {
        doc["family"] = family_section(g, options);
        rep.exit_code = doc["family"]["pass"].get<bool>() ? 0 : 1;
    } else {
        throw std::invalid_argument("unknown command '" + command + "'");
    }
    return rep;
}

std::string render_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

std::string render_human(const nlohmann::json& doc) {
    std::string out;
    if (doc.contains("graph"))
        out += "graph: " +
               std::to_string(doc["graph"]["num_vertices"].get<std::size_t>()) +
               " vertices, " +
               std::to_string(doc["graph"]["num_edges"].get<std::size_t>()) +
               " edges\n";

    if (doc.contains("classification")) {
        out += "classification:\n";
        for (const char* key : {"sce", "fin", "inf", "rg", "sg"}) {
            out += "  " + std::string(key) + ":";
            for (const auto& v : doc["classification"][key])
                out += " " + v.get<std::string>();
            out += "\n";
        }
    }

    if (doc.contains("condition_l")) {
        const auto& cl = doc["condition_l"];
        out += std::string("condition L: ") +
               (cl["holds"].get<bool>() ? "holds" : "FAILS") + "\n";
        for (const auto& w : cl["witness_cycles"])
            out += "  loop without entrances at " +
                   w["base"].get<std::string>() + ": " +
                   w["path"].get<std::string>() + "\n";
    }

    if (doc.contains("k_theory")) {
        const auto& kt = doc["k_theory"];
        out += "k-theory:\n";
        out += "  K0 = " + kt["k0"]["group"].get<std::string>() + "\n";
        out += "  K1 = " + kt["k1"]["group"].get<std::string>() + "\n";
    }

    if (doc.contains("fock")) {
        const auto& f = doc["fock"];
        out += "fock relations (depth " + std::to_string(f["depth"].get<std::size_t>()) +
               ", dim " + std::to_string(f["dim"].get<std::size_t>()) + ", seed " +
               std::to_string(f["seed"].get<std::uint64_t>()) + "):\n";
        render_relations(out, f["relations"]);
        if (f.contains("dynamical")) {
            const auto& d = f["dynamical"];
            out += "  dynamical: isometry " +
                   fmt_double(d["isometry_residual"].get<double>()) +
                   ", covariance " +
                   fmt_double(d["covariance_residual"].get<double>()) +
                   (d["pass"].get<bool>() ? "  ok" : "  FAIL") + "\n";
        }
        out += std::string("fock: ") +
               (f["pass"].get<bool>() ? "pass" : "FAIL") + "\n";
    }

    if (doc.contains("paths")) {
        const auto& p = doc["paths"];
        out += "paths:\n";
        for (const auto& lvl : p["levels"]) {
            out += "  level " + std::to_string(lvl["level"].get<std::size_t>()) +
                   " (" + std::to_string(lvl["paths"].size()) + "):";
            for (const auto& s : lvl["paths"]) out += " " + s.get<std::string>();
            out += "\n";
        }
    }

    if (doc.contains("family")) {
        const auto& f = doc["family"];
        out += "family check (tolerance " +
               fmt_double(f["tolerance"].get<double>()) + "):\n";
        render_relations(out, f["relations"]);
        out += std::string("  injective: ") +
               (f["injective"].get<bool>() ? "yes" : "no") + "\n";
        out += std::string("family: ") +
               (f["pass"].get<bool>() ? "pass" : "FAIL") + "\n";
    }
    return out;
}

}  // namespace graphalg
