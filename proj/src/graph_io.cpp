#include "graphalg/graph_io.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace graphalg {

namespace {

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + what);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

Mult parse_mult(const std::string& tok, int lineno) {
    if (tok == "inf") return Mult::omega();
    std::uint64_t n = 0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), n);
    if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
        fail(lineno, "multiplicity must be a positive integer or 'inf', got '" +
                         tok + "'");
    if (n == 0) fail(lineno, "multiplicity must be positive");
    return Mult::finite(n);
}

}  // namespace

Graph parse_graph_file(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<EdgeRecord> edges;
    std::set<std::string> seen_vertices, seen_edges;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "vertex") {
            if (toks.size() != 2) fail(lineno, "expected: vertex <id>");
            if (!seen_vertices.insert(toks[1]).second)
                fail(lineno, "duplicate vertex id '" + toks[1] + "'");
            vertices.push_back(toks[1]);
        } else if (toks[0] == "edge") {
            if (toks.size() != 4 && toks.size() != 5)
                fail(lineno, "expected: edge <id> <dom> <ran> [<mult>|inf]");
            if (!seen_edges.insert(toks[1]).second)
                fail(lineno, "duplicate edge id '" + toks[1] + "'");
            for (std::size_t k = 2; k <= 3; ++k)
                if (!seen_vertices.count(toks[k]))
                    fail(lineno, "undeclared vertex '" + toks[k] + "'");
            const Mult m =
                toks.size() == 5 ? parse_mult(toks[4], lineno) : Mult::finite(1);
            edges.push_back({toks[1], toks[2], toks[3], m});
        } else {
            fail(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    return build_graph(vertices, edges);
}

std::string serialize_graph(const Graph& g) {
    std::string out;
    for (const auto& v : g.vertices()) out += "vertex " + v + "\n";
    for (const auto& e : g.edges()) {
        out += "edge " + e.id + " " + e.dom + " " + e.ran;
        if (e.mult.is_omega())
            out += " inf";
        else if (e.mult.count() != 1)
            out += " " + std::to_string(e.mult.count());
        out += "\n";
    }
    return out;
}

OperatorFamily parse_family_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("family file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("P") ||
        !j.contains("S"))
        throw std::invalid_argument(
            "family file: expected an object with dim, P, and S");

    OperatorFamily fam;
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::uint64_t>() == 0)
        throw std::invalid_argument("family file: dim must be a positive integer");
    fam.space_dim = j["dim"].get<std::size_t>();

    auto read_matrix = [&](const nlohmann::json& m, const std::string& what) {
        if (!m.is_array() || m.size() != fam.space_dim)
            throw std::invalid_argument("family file: " + what + " must have " +
                                        std::to_string(fam.space_dim) + " rows");
        CMatrix out(fam.space_dim, fam.space_dim);
        for (std::size_t r = 0; r < fam.space_dim; ++r) {
            const auto& row = m[r];
            if (!row.is_array() || row.size() != fam.space_dim)
                throw std::invalid_argument("family file: " + what +
                                            " rows must have " +
                                            std::to_string(fam.space_dim) +
                                            " entries");
            for (std::size_t c = 0; c < fam.space_dim; ++c) {
                const auto& z = row[c];
                if (!z.is_array() || z.size() != 2 || !z[0].is_number() ||
                    !z[1].is_number())
                    throw std::invalid_argument("family file: entries of " + what +
                                                " must be [re, im] pairs");
                out.at(r, c) = cplx(z[0].get<double>(), z[1].get<double>());
            }
        }
        return out;
    };

    for (const auto& [key, val] : j["P"].items())
        fam.P.emplace(key, read_matrix(val, "P[" + key + "]"));
    for (const auto& [key, val] : j["S"].items())
        fam.S.emplace(key, read_matrix(val, "S[" + key + "]"));
    return fam;
}

}  // namespace graphalg
