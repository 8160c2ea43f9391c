#pragma once

#include <nlohmann/json.hpp>

#include "dihedra/schema.hpp"

namespace dihedra {

struct RunResult {
    bool ok = true;
    nlohmann::ordered_json report;
};

struct CohomologyOptions {
    std::optional<std::size_t> max_weight;
    std::optional<std::pair<int, int>> degrees;
    std::optional<long> filtration;
    bool decompose = false;
};

struct DeformOptions {
    std::string subcommand = "mc-check";  // mc-check | gauge | moduli
    std::optional<std::string> ring;      // overrides the file's ring
    std::string flavor = "plain";
};

RunResult run_validate(const AlgebraDescription& d);
RunResult run_cohomology(const AlgebraDescription& d, const std::string& which,
                         const CohomologyOptions& opts);
RunResult run_deform(const AlgebraDescription& d, const DeformOptions& opts);
RunResult run_isocheck(const AlgebraDescription& d);

// Plain-text rendering of a report (the json itself is the machine format).
std::string render_table(const nlohmann::ordered_json& report);

}  // namespace dihedra
