#include "emot/rubric.hpp"

#include <cmath>

#include "emot/errors.hpp"
#include "emot/text.hpp"

namespace emot {

const std::array<RubricCriterion, kCriterionCount>& all_rubric_criteria() {
    static const std::array<RubricCriterion, kCriterionCount> kAll = {
        RubricCriterion::RecursionDepth,       RubricCriterion::DormantThoughtManagement,
        RubricCriterion::CrossDomainSynthesis, RubricCriterion::MemoryUtilisation,
        RubricCriterion::StructuredOutput,     RubricCriterion::SolutionQuality,
    };
    return kAll;
}

const char* criterion_name(RubricCriterion criterion) {
    switch (criterion) {
        case RubricCriterion::RecursionDepth: return "Recursion Depth";
        case RubricCriterion::DormantThoughtManagement: return "Dormant Thought Management";
        case RubricCriterion::CrossDomainSynthesis: return "Cross-Domain Synthesis";
        case RubricCriterion::MemoryUtilisation: return "Memory Utilisation";
        case RubricCriterion::StructuredOutput: return "Structured Output";
        case RubricCriterion::SolutionQuality: return "Solution Quality";
    }
    return "?";
}

Scorecard floor_scorecard() {
    Scorecard card;
    card.scores.fill(1);
    return card;
}

std::array<int, kCriterionCount> parse_scores(const std::string& judge_text) {
    std::array<int, kCriterionCount> scores{};
    std::array<bool, kCriterionCount> found{};

    for (const auto& raw : split_lines(judge_text)) {
        const std::string line = trim(raw);
        const auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        const std::string name = to_lower(trim(line.substr(0, colon)));
        for (RubricCriterion criterion : all_rubric_criteria()) {
            if (name != to_lower(criterion_name(criterion))) continue;
            const std::string value = trim(line.substr(colon + 1));
            int score = 0;
            try {
                score = std::stoi(value);
            } catch (const std::exception&) {
                continue;
            }
            if (score < 1 || score > 5)
                raise(ErrorCode::OutOfRangeScore, std::string(criterion_name(criterion)) + ": " +
                                                      value);
            const auto idx = static_cast<size_t>(criterion);
            if (!found[idx]) {
                scores[idx] = score;
                found[idx] = true;
            }
        }
    }
    for (RubricCriterion criterion : all_rubric_criteria()) {
        if (!found[static_cast<size_t>(criterion)])
            raise(ErrorCode::MissingCriterion, criterion_name(criterion));
    }
    return scores;
}

double round_half_up(double value, int decimals) {
    double scale = 1.0;
    for (int i = 0; i < decimals; ++i) scale *= 10.0;
    // The epsilon absorbs binary representation dust on exact halves.
    return std::floor(value * scale + 0.5 + 1e-9) / scale;
}

double aggregate_case(const Scorecard& card) {
    double sum = 0.0;
    for (int s : card.scores) sum += s;
    return round_half_up(sum / kCriterionCount, 2);
}

double aggregate_run(const std::vector<double>& case_averages) {
    if (case_averages.empty()) raise(ErrorCode::BadParams, "aggregate_run needs at least one case");
    double sum = 0.0;
    for (double v : case_averages) sum += v;
    return round_half_up(sum / static_cast<double>(case_averages.size()), 2);
}

OverallStats aggregate_overall(const std::vector<double>& run_overalls) {
    if (run_overalls.size() < 2)
        raise(ErrorCode::BadParams, "aggregate_overall needs at least two runs");
    std::vector<double> rounded;
    rounded.reserve(run_overalls.size());
    for (double v : run_overalls) rounded.push_back(round_half_up(v, 1));

    double sum = 0.0;
    for (double v : rounded) sum += v;
    const double mean = sum / static_cast<double>(rounded.size());

    double ss = 0.0;
    for (double v : rounded) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(rounded.size() - 1));

    return {round_half_up(mean, 2), round_half_up(sd, 2)};
}

std::array<double, kCriterionCount> per_criterion_means(const std::vector<Scorecard>& cards) {
    if (cards.empty()) raise(ErrorCode::BadParams, "per_criterion_means needs scorecards");
    std::array<double, kCriterionCount> means{};
    for (const auto& card : cards) {
        for (size_t i = 0; i < kCriterionCount; ++i) means[i] += card.scores[i];
    }
    for (auto& m : means) m = round_half_up(m / static_cast<double>(cards.size()), 1);
    return means;
}

}  // namespace emot
