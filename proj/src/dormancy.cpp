#include "emot/dormancy.hpp"

#include <algorithm>

#include "emot/errors.hpp"

namespace emot {

const char* phase_name(Phase phase) {
    switch (phase) {
        case Phase::HypothesisGeneration: return "HypothesisGeneration";
        case Phase::HypothesisTesting: return "HypothesisTesting";
        case Phase::Synthesis: return "Synthesis";
    }
    return "?";
}

const char* reactivation_kind_name(ReactivationKind kind) {
    switch (kind) {
        case ReactivationKind::Stay: return "Stay";
        case ReactivationKind::Partial: return "Partial";
        case ReactivationKind::Reactivate: return "Reactivate";
    }
    return "?";
}

Phase phase_for_iteration(int i, int total) {
    if (total < 1 || i < 1 || i > total)
        raise(ErrorCode::OutOfRange, "iteration " + std::to_string(i) + " of " +
                                         std::to_string(total));
    if (i == total) return Phase::Synthesis;
    if (i == 1) return Phase::HypothesisGeneration;
    return Phase::HypothesisTesting;
}

DormancyRecord enter_dormancy(Topology& topology, int node_id, const std::string& node_content,
                              const std::string& context_text, int now_iteration, Phase phase_now,
                              Phase phase_next, bool sdc_enabled, double threshold) {
    if (!sdc_enabled)
        raise(ErrorCode::SdcDisabled, "dormancy controller is disabled for this run");
    ReasoningNode& node = topology.node(node_id);
    if (!node.state.processing())
        raise(ErrorCode::NotACandidate,
              "node " + std::to_string(node_id) + " is " + state_name(node.state.kind));
    if (!node.trust || !is_dormancy_candidate(*node.trust, threshold))
        raise(ErrorCode::NotACandidate,
              "node " + std::to_string(node_id) + " is not below the trust threshold");

    DormancyRecord record;
    record.node_id = node_id;
    record.entry_trust = *node.trust;
    record.profile.term_weights = normalized_term_counts(node_content);
    record.profile.phase_affinity = {static_cast<int>(phase_now), static_cast<int>(phase_next)};
    record.profile.created_context_digest = context_text;
    record.profile.dormant_since = now_iteration;

    node.relevance_profile = record.profile;
    topology.set_state(node_id, NodeState::dormant());
    return record;
}

double reactivation_probability(const DormancyRecord& record, const std::string& context_text,
                                Phase phase, int now_iteration, const DormancyParams& params) {
    const SparseVec context_vec =
        normalized_term_counts_in_space(context_text, record.profile.term_weights);
    const double cos = sparse_cosine(context_vec, record.profile.term_weights);
    const double phase_match =
        record.profile.phase_affinity.count(static_cast<int>(phase)) ? 1.0 : 0.0;
    const int age = now_iteration - record.profile.dormant_since;
    const double freshness = 1.0 / (1.0 + age);
    const double p = params.cosine_weight * cos + params.phase_weight * phase_match +
                     params.freshness_weight * freshness;
    return std::clamp(p, 0.0, 1.0);
}

std::map<int, ReactivationDecision> evaluate_dormant_pool(
    const std::vector<DormancyRecord>& records, const std::string& context_text, Phase phase,
    int now_iteration, const DormancyParams& params) {
    std::map<int, ReactivationDecision> decisions;
    for (const auto& record : records) {
        const double p =
            reactivation_probability(record, context_text, phase, now_iteration, params);
        ReactivationDecision decision;
        decision.probability = p;
        if (p < params.partial_band_low) {
            decision.kind = ReactivationKind::Stay;
        } else if (p < params.reactivate_band) {
            decision.kind = ReactivationKind::Partial;
        } else {
            decision.kind = ReactivationKind::Reactivate;
        }
        decisions[record.node_id] = decision;
    }
    return decisions;
}

}  // namespace emot
