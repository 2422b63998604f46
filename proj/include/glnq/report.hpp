// report.hpp -- JSON documents for verification runs.
//
// Key order is fixed by construction (ordered_json), and nothing
// machine-dependent (timings, thread counts) is embedded, so identical
// configurations serialize to byte-identical documents.

#pragma once

#include <json.hpp>

#include "glnq/crosscheck.hpp"
#include "glnq/distinction.hpp"
#include "glnq/geometry.hpp"

namespace glnq {

using Json = nlohmann::ordered_json;

inline Json distinction_report_json(const DistinctionReport& report) {
    Json rows = Json::array();
    for (const DistinctionRow& row : report.rows) {
        Json r;
        r["degree"] = row.degree;
        r["cuspidal"] = row.cuspidal;
        r["dim_invariants"] = row.distinction_dimension;
        r["self_dual"] = row.self_dual;
        r["whittaker"] = row.whittaker;
        rows.push_back(std::move(r));
    }
    Json out;
    out["n"] = report.spec.n;
    out["q"] = report.spec.q;
    out["p"] = report.involution.p;
    out["rows"] = std::move(rows);
    out["theorem_holds"] = report.theorem_holds;
    return out;
}

inline Json crosscheck_report_json(const CrosscheckReport& report) {
    Json out;
    out["n"] = report.n;
    out["q"] = report.q;
    out["cuspidals_per_rank"] = report.cuspidals_per_rank;
    out["checks"] = report.checks;
    out["ok"] = report.ok;
    if (!report.ok) out["failure"] = report.failure;
    return out;
}

inline Json double_coset_report_json(const DoubleCosetReport& report) {
    Json cosets = Json::array();
    for (const auto& coset : report.cosets) {
        Json c;
        c["size"] = coset.size;
        c["has_witness"] = coset.has_witness;
        if (coset.has_witness) c["witness_code"] = coset.witness_code;
        cosets.push_back(std::move(c));
    }
    Json out;
    out["n"] = report.involution.n;
    out["p"] = report.involution.p;
    out["composition"] = report.comp.to_string();
    out["cosets"] = std::move(cosets);
    out["all_have_witness"] = report.all_have_witness;
    return out;
}

// Top-level document: versioned, with the mathematical configuration
// embedded for reproducibility (thread counts and paths excluded on
// purpose, so reports are byte-identical across machines).
inline Json wrap_reports(const Json& config, const Json& reports) {
    Json out;
    out["format_version"] = 1;
    out["config"] = config;
    out["reports"] = reports;
    return out;
}

} // namespace glnq
