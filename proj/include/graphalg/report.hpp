#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "graphalg/graph.hpp"
#include "graphalg/verify.hpp"

namespace graphalg {

struct ReportOptions {
    std::size_t depth = 4;
    double tol = 1e-9;
    std::size_t max_dim = 20000;
    std::uint64_t seed = 1;
    const OperatorFamily* family = nullptr;  // consumed by check-family
};

/// A structured report plus the process exit code it implies: 0 on success,
/// 1 when a relation check failed. Input errors surface as exceptions.
struct Report {
    nlohmann::json doc;
    int exit_code = 0;
};

/// Builds the report for one command: analyze (classification, condition L,
/// K-theory), ktheory, fock (relation suite), paths (path listing), or
/// check-family (Cuntz-Krieger validation of options.family).
Report generate_report(const std::string& command, const Graph& g,
                       const ReportOptions& options);

/// Canonical JSON bytes: sorted keys, two-space indent, trailing newline.
/// Identical inputs render byte-identically.
std::string render_json(const nlohmann::json& doc);

/// Plain-text rendering of the same document for terminals.
std::string render_human(const nlohmann::json& doc);

}  // namespace graphalg
