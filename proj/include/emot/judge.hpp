#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "emot/backend.hpp"
#include "emot/rubric.hpp"

namespace emot {

struct MethodOutput {
    std::string method;  // e.g. "EMoT", "CoT"
    std::string text;
};

// Removes every line containing one of the fixed method labels, so the
// judge cannot see which system produced an output.
std::string strip_method_labels(const std::string& text);

const std::vector<std::string>& method_label_list();

// Full judging prompt: rubric, case, both anonymized outputs, and the
// reply-format contract. Exposed for tests and prompt review.
std::string build_judge_prompt(const std::string& case_prompt, const std::string& output_a,
                               const std::string& output_b);
std::string build_single_judge_prompt(const std::string& case_prompt,
                                      const std::string& output_a);

// Splits a judge reply into the "Output A:" / "Output B:" blocks.
std::pair<std::string, std::string> split_judge_reply(const std::string& reply);

// Scores two outputs blind: labels stripped, presentation order decided
// by the seed, one judge call, two retries with a reformat instruction
// before JudgeParseFailure. Empty outputs score as the all-1s floor
// without consulting the judge. Returns scorecards in argument order.
std::pair<Scorecard, Scorecard> blind_pair_evaluate(const MethodOutput& first,
                                                    const MethodOutput& second,
                                                    const std::string& case_id,
                                                    const std::string& case_prompt,
                                                    Backend& judge_backend, uint64_t seed);

// Single-output variant used when the counterpart was empty.
Scorecard judge_single(const MethodOutput& output, const std::string& case_id,
                       const std::string& case_prompt, Backend& judge_backend);

}  // namespace emot
