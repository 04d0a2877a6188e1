#pragma once

#include <array>
#include <string>
#include <vector>

namespace emot {

// Six judging criteria, fixed order.
enum class RubricCriterion {
    RecursionDepth = 0,
    DormantThoughtManagement,
    CrossDomainSynthesis,
    MemoryUtilisation,
    StructuredOutput,
    SolutionQuality,
};

constexpr int kCriterionCount = 6;

const std::array<RubricCriterion, kCriterionCount>& all_rubric_criteria();
const char* criterion_name(RubricCriterion criterion);

struct Scorecard {
    std::array<int, kCriterionCount> scores{};  // each in 1..5
    std::string case_id;
    int run_index = 0;
    std::string method_blind_label;  // "A" or "B"

    int score(RubricCriterion criterion) const {
        return scores[static_cast<size_t>(criterion)];
    }
};

Scorecard floor_scorecard();  // all criteria at 1

// Parses one output's block of six "<criterion name>: <integer>" lines;
// criterion names matched case-insensitively against the fixed
// spellings. Throws MissingCriterion / OutOfRangeScore.
std::array<int, kCriterionCount> parse_scores(const std::string& judge_text);

// Half-up decimal rounding used by every aggregate.
double round_half_up(double value, int decimals);

// Mean of the six criteria, 2 decimals.
double aggregate_case(const Scorecard& card);

// Mean of per-case averages, 2 decimals. Throws BadParams on empty.
double aggregate_run(const std::vector<double>& case_averages);

// Each run overall is first rounded to 1 decimal; the mean of the
// rounded values (2 decimals) and their sample standard deviation
// (divisor n-1, 2 decimals) are reported. Throws BadParams for fewer
// than two runs.
struct OverallStats {
    double mean = 0.0;
    double sd = 0.0;
};
OverallStats aggregate_overall(const std::vector<double>& run_overalls);

// Per-criterion mean across all scorecards, 1 decimal each.
std::array<double, kCriterionCount> per_criterion_means(const std::vector<Scorecard>& cards);

}  // namespace emot
