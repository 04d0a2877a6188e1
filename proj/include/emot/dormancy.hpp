#pragma once

#include <map>
#include <string>
#include <vector>

#include "emot/hierarchy.hpp"
#include "emot/trust.hpp"

namespace emot {

enum class Phase { HypothesisGeneration = 0, HypothesisTesting = 1, Synthesis = 2 };

const char* phase_name(Phase phase);

// Maps an iteration onto the run's phase sequence: the first iteration
// generates hypotheses, the last synthesizes, everything between tests.
// A single-iteration run is pure synthesis.
// Throws OutOfRange unless 1 <= i <= total.
Phase phase_for_iteration(int i, int total);

struct DormancyRecord {
    int node_id = -1;
    RelevanceProfile profile;
    TrustScore entry_trust;
};

enum class ReactivationKind { Stay, Partial, Reactivate };

const char* reactivation_kind_name(ReactivationKind kind);

struct ReactivationDecision {
    ReactivationKind kind = ReactivationKind::Stay;
    double probability = 0.0;  // equals the partial weight for Partial decisions
};

// Blend weights and decision bands for reactivation; all five constants
// are configuration.
struct DormancyParams {
    double cosine_weight = 0.6;
    double phase_weight = 0.3;
    double freshness_weight = 0.1;
    double partial_band_low = 0.3;   // p below this stays dormant
    double reactivate_band = 0.7;    // p at or above this fully reactivates
};

// Transitions the node to Dormant and captures its relevance profile:
// unit-norm tf-idf of the node's accumulated insight text, phase
// affinity {phase_now, phase_next}, and the context snapshot.
// Throws SdcDisabled / NotACandidate per the preconditions.
DormancyRecord enter_dormancy(Topology& topology, int node_id, const std::string& node_content,
                              const std::string& context_text, int now_iteration, Phase phase_now,
                              Phase phase_next, bool sdc_enabled, double threshold = 0.5);

// clamp(0.6*cos + 0.3*phase_match + 0.1/(1 + age), 0, 1), cosine taken
// between the context vector projected into the record's term space and
// the stored profile.
double reactivation_probability(const DormancyRecord& record, const std::string& context_text,
                                Phase phase, int now_iteration,
                                const DormancyParams& params = {});

// Pure banding over a snapshot of the pool; state application is the
// engine's job. Keys are node ids.
std::map<int, ReactivationDecision> evaluate_dormant_pool(
    const std::vector<DormancyRecord>& records, const std::string& context_text, Phase phase,
    int now_iteration, const DormancyParams& params = {});

}  // namespace emot
