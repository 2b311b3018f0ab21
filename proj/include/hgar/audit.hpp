#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hgar {

struct AuditConfig {
    std::string grid = "small"; ///< "small" or "full" (more random instances, wider formula grid)
    std::uint64_t seed = 1;
    unsigned workers = 1;
    bool determinism = true; ///< run criterion 9, which repeats 1-8 three more times
};

struct CriterionResult {
    unsigned id = 0;
    std::string title;
    bool values_ok = false;
    nlohmann::json values; ///< everything except timings; byte-stable for a fixed seed
    std::string summary;
    double seconds = 0;
    double limit_seconds = 0;

    bool passed() const { return values_ok && seconds <= limit_seconds; }
};

struct AuditResult {
    std::vector<CriterionResult> criteria;

    bool passed() const;
    nlohmann::json values_json() const;
    nlohmann::json timing_json() const;
};

std::vector<unsigned> audit_criteria();

/// Runs a single acceptance criterion. Throws std::out_of_range for an unknown id.
CriterionResult run_criterion(unsigned id, const AuditConfig& config);

/// Runs every criterion in order, reporting each as it finishes.
AuditResult run_audit(const AuditConfig& config,
                      const std::function<void(const CriterionResult&)>& on_done = {});

} // namespace hgar
