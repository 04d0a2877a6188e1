#pragma once

#include <optional>
#include <string>
#include <vector>

#include "emot/backend.hpp"
#include "emot/distill.hpp"
#include "emot/dormancy.hpp"
#include "emot/hierarchy.hpp"
#include "emot/optimizer.hpp"
#include "emot/palace.hpp"
#include "emot/trace.hpp"
#include "emot/trust.hpp"

namespace emot {

struct EngineConfig {
    int iterations = 3;
    bool dormancy_enabled = true;
    bool memory_palace_enabled = true;
    double trust_threshold = 0.5;
    int qam_rounds = 2;
    std::optional<Topology> topology;  // default network when unset
    uint64_t seed = 42;

    int memory_k = 3;
    int lateral_budget = 2;
    TrustWeights trust_weights;
    DormancyParams dormancy;
    DistillParams distill_params;
    PalaceConfig palace;
    std::optional<Palace> initial_palace;  // cross-run persistence
    CostModel cost_model;

    // When set, the trace is written here on completion and also flushed
    // before a backend error propagates out of run_problem.
    std::optional<std::string> trace_path;
};

enum class RunStatus { Synthesized, FailureSynthesis };

const char* run_status_name(RunStatus status);

struct SolutionSection {
    std::string heading;
    std::string text;
    std::vector<int> insight_ids;
};

struct SolutionDocument {
    std::string body;
    std::vector<int> contributing_insights;
    std::vector<SolutionSection> sections;

    bool empty() const { return body.empty(); }
};

std::string render_solution_body(const std::vector<SolutionSection>& sections);

struct RunResult {
    SolutionDocument solution;
    RunStatus status = RunStatus::FailureSynthesis;
    std::vector<Insight> insights;
    Trace trace;
    UsageLedger ledger;
    double internal_quality = 0.0;
    double estimated_cost = 0.0;
    Topology topology;  // final node states
    Palace palace{PalaceConfig{}};
    std::vector<DistilledInsight> distilled;  // all representatives, run order
};

// Cross-level prompt fragments for one node: distilled lower-level
// evidence, meta constraints, and up to `lateral_budget` highest-trust
// peer insights from lateral neighbors this iteration.
struct HifFragments {
    std::vector<std::string> bottom_up;
    std::vector<std::string> top_down;  // already "CONSTRAINT: " prefixed
    std::vector<std::string> lateral;
};

HifFragments hif_inputs(const Topology& topology, int node_id,
                        const std::vector<DistilledInsight>& lower_level_reps,
                        const std::vector<std::string>& latest_meta_texts,
                        const std::vector<Insight>& iteration_level_insights,
                        int lateral_budget);

// One backend call combining the distilled Macro/Meta representatives
// into a final document, gated on at least one Macro or Meta node still
// processing; otherwise an empty body (FailureSynthesis).
SolutionDocument synthesize(const Topology& topology,
                            const std::vector<DistilledInsight>& macro_meta_pool,
                            const std::string& problem, const CompletionFn& complete);

struct QamRound {
    int round = 0;
    double composite = 0.0;
    bool accepted = false;
};

struct QamOutcome {
    SolutionDocument solution;
    double initial_composite = 0.0;
    double internal_quality = 0.0;
    std::vector<QamRound> rounds;
};

// Accept-if-strictly-better refinement; stops at the first rejected
// revision. internal_quality is the final accepted composite.
QamOutcome qam_refine(const SolutionDocument& solution, const std::string& problem,
                      const std::vector<std::string>& meta_constraints, int rounds,
                      const CompletionFn& revise, const CompletionFn& assess,
                      const TrustWeights& weights = {});

// Executes the full iteration loop; see the run trace for the exact
// event order. Throws ConfigError / EmptyPrompt / NoActiveNodes.
RunResult run_problem(const std::string& problem, const EngineConfig& config, Backend& backend);

// Reply-grammar helpers shared with the harness.
std::vector<std::string> parse_insight_lines(const std::string& reply_text);
std::string strip_trust_lines(const std::string& reply_text);

}  // namespace emot
