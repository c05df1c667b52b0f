#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "graphalg/graph_io.hpp"
#include "graphalg/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analyzer for finite discrete topological graphs: vertex "
                 "classification, condition L, path spaces, truncated Fock "
                 "representation checks, K-theory, and operator-family "
                 "validation"};
    app.require_subcommand(1);

    std::string graph_path, family_path;
    graphalg::ReportOptions opt;
    bool json_out = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("graph", graph_path, "graph file")->required();
        cmd->add_flag("--json", json_out, "emit the JSON report");
        cmd->add_option("--depth", opt.depth, "truncation / listing depth")
            ->capture_default_str();
        cmd->add_option("--tol", opt.tol, "residual tolerance")
            ->capture_default_str();
        cmd->add_option("--max-dim", opt.max_dim,
                        "cap on the truncated space dimension")
            ->capture_default_str();
        cmd->add_option("--seed", opt.seed, "seed for randomized sweeps")
            ->capture_default_str();
        return cmd;
    };

    add_common(app.add_subcommand(
        "analyze", "vertex classification, condition L, and K-theory"));
    add_common(app.add_subcommand("ktheory", "K0 and K1 of the graph algebra"));
    add_common(app.add_subcommand(
        "fock", "truncated Fock representation relation suite"));
    add_common(app.add_subcommand("paths", "list path spaces level by level"));
    add_common(app.add_subcommand(
                   "check-family",
                   "validate an operator family against the Cuntz-Krieger "
                   "relations"))
        ->add_option("family", family_path, "family JSON file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad usage is an input error
    }

    try {
        const graphalg::Graph g =
            graphalg::parse_graph_file(read_file(graph_path));
        graphalg::OperatorFamily fam;
        if (app.got_subcommand("check-family")) {
            fam = graphalg::parse_family_json(read_file(family_path));
            opt.family = &fam;
        }
        const std::string command = app.get_subcommands().front()->get_name();
        const graphalg::Report rep = graphalg::generate_report(command, g, opt);
        std::cout << (json_out ? graphalg::render_json(rep.doc)
                               : graphalg::render_human(rep.doc));
        return rep.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
