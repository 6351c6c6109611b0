#pragma once

#include "fol/document.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fol {

inline const std::vector<std::string> kRunCommands{"chains", "mmp", "zariski", "theta", "classify", "vanishing", "perturb"};

struct RunOptions {
    std::string command;
    // Named divisor used as delta; defaults to "delta" when present.
    std::optional<std::string> divisor;
    std::optional<Rational> epsilon;
};

struct Report {
    nlohmann::json json;
    std::string text;
    // Assertion caveats and extrapolation flags; --strict turns them into errors.
    std::vector<std::string> warnings;
    bool ok = true;
};

// Violations are data: `ok` is false when any clause fails.
Report validate_report(const Document& doc);

// Throws ValidationFailed for invalid models, SchemaError for unknown
// commands or divisors, and whatever the module raises.
Report run_report(const Document& doc, const RunOptions& opts);

// Iterative Zariski, chain assembly and MMP pullback must agree exactly, the
// certificates must hold and every maximal chain must replay. Throws
// MismatchError naming the disagreeing pair.
Report crosscheck_report(const Document& doc, const std::optional<std::string>& divisor = std::nullopt);

std::string render_json(const Report& r);

}  // namespace fol
