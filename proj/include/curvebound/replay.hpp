#ifndef CURVEBOUND_REPLAY_HPP
#define CURVEBOUND_REPLAY_HPP

#include <string>
#include <utility>
#include <vector>

#include "curvebound/json_io.hpp"

namespace curvebound {

enum class StepStatus { Verified, External, Flagged, Failed };

const char* to_string(StepStatus s);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct ReportStep {
    int index = 0;
    std::string title;
    std::string claim;
    std::string operation;
    KeyValues inputs;
    KeyValues outputs;
    std::vector<std::string> flags;  // items needing attention, status permitting
    StepStatus status = StepStatus::Verified;
    Json witness;  // machine-readable outputs
};

struct ProofReport {
    std::vector<ReportStep> steps;
    std::string verdict;  // VERIFIED, FLAGGED or FAILED
    std::string conclusion;

    std::size_t count(StepStatus s) const;
};

enum class SearchMode {
    Complete,     // run the genus-10 search in full
    ForwardOnly,  // only verify the expected candidate against the constraints
};

struct ReplayOptions {
    bool a2_filter = true;
    bool skip_external = false;  // omit the detail of the external step
    SearchMode genus10_search = SearchMode::Complete;
    unsigned bound_degree = 6;
};

/// Replays the determination of the maximal number of rational points on a
/// genus-4 curve over F_7. Steps are run in order; a failing step is recorded
/// with its witness and the remaining steps are skipped. No timings or other
/// run-dependent data enter the report.
ProofReport replay_theorem(const ReplayOptions& opts = {});

Json to_json(const ProofReport& r);
std::string to_markdown(const ProofReport& r);

}  // namespace curvebound

#endif
