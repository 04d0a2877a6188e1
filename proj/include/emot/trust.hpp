#pragma once

#include <functional>
#include <optional>
#include <string>

namespace emot {

// Composite node quality over four dimensions in [0, 1]:
// success likelihood, novelty, depth, coherence.
struct TrustScore {
    double s = 0.0;
    double n = 0.0;
    double d = 0.0;
    double c = 0.0;
    double composite = 0.0;
};

struct TrustWeights {
    double s = 0.4;
    double n = 0.2;
    double d = 0.2;
    double c = 0.2;
};

// composite = 0.4*s + 0.2*n + 0.2*d + 0.2*c with default weights.
// Throws OutOfRange for any input outside [0, 1].
TrustScore compute_trust(double s, double n, double d, double c,
                         const TrustWeights& weights = {});

// Strictly below the threshold. Throws OutOfRange for a threshold
// outside [0, 1].
bool is_dormancy_candidate(const TrustScore& t, double threshold = 0.5);

// Neutral fallback used when a backend reply cannot be parsed: all
// dimensions 0.5, composite 0.5, never a dormancy candidate.
TrustScore fallback_trust(const TrustWeights& weights = {});

// Scans the reply for a line of the form "S=x N=x D=x C=x"; returns
// nothing when absent or when any value falls outside [0, 1].
std::optional<TrustScore> parse_trust_reply(const std::string& reply_text,
                                            const TrustWeights& weights = {});

// Dimension-elicitation prompt for a reasoning unit. Deliberately a
// function of the role tag and level only, so repeated assessments of
// the same node are cache hits.
std::string build_trust_prompt(const std::string& role_tag, const std::string& level_name);

// Elicitation prompt over free text (solution refinement scoring).
std::string build_text_trust_prompt(const std::string& text);

// Queries the completion callable with the elicitation prompt and
// parses the reply; parse failures yield fallback_trust().
using CompletionFn = std::function<std::string(const std::string& prompt)>;
TrustScore assess_with(const CompletionFn& complete, const std::string& prompt,
                       const TrustWeights& weights = {});

}  // namespace emot
