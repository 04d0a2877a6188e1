#pragma once

#include <span>
#include <string>
#include <vector>

#include "emot/hierarchy.hpp"

namespace emot {

struct DistilledInsight {
    int insight_id = -1;   // representative
    std::string text;
    int source_node = -1;
    int iteration = 0;
    double effective_trust = 0.0;
    double relevance = 0.0;           // cosine to the problem context
    std::vector<int> source_ids;      // surviving members the representative stands for
};

struct DistillParams {
    double eps = 0.7;
    int min_pts = 2;
    double contradiction_similarity = 0.8;
};

// Marks the lower-trust member of each contradicting pair (cosine
// similarity >= 0.8 and exactly one side carrying a negation marker)
// and returns the indices into `insights` that survive.
std::vector<size_t> resolve_contradictions(std::span<Insight> insights,
                                           const std::vector<std::vector<double>>& vectors,
                                           double similarity_threshold = 0.8);

// Convenience overload that vectorizes the group itself.
std::vector<size_t> resolve_contradictions(std::span<Insight> insights,
                                           double similarity_threshold = 0.8);

// True when the raw token stream carries one of: not, no, never,
// cannot, "ruled out".
bool contains_negation(const std::string& text);

// Cluster, resolve contradictions per cluster, pick the highest-trust
// representative (ties: lowest id), keep noise points as singletons,
// score each representative against the problem context, and bump the
// utilisation count of every surviving source.
std::vector<DistilledInsight> distill(std::span<Insight> insights,
                                      const std::string& problem_context,
                                      const DistillParams& params = {});

}  // namespace emot
