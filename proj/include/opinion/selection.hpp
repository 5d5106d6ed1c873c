#pragma once

#include <string>
#include <vector>

#include "opinion/graph.hpp"

namespace opinion {

struct GainEstimate {
    CandidateEdge edge;
    double gain = 0.0;
};

/// Outcome of one selection run. h_trace[i] is the objective after i
/// additions (h_trace[0] = H of the unmodified graph) and is non-decreasing;
/// gains[i] is the gain value the algorithm acted on when picking edge i.
struct SelectionResult {
    std::vector<CandidateEdge> chosen;
    std::vector<double> gains;
    std::vector<double> h_trace;
    std::vector<double> elapsed_ms;  // per round
    std::string algorithm_tag;
    bool truncated = false;  // k exceeded the candidate count
};

}  // namespace opinion
