#include "emot/judge.hpp"

#include <sstream>

#include "emot/errors.hpp"
#include "emot/text.hpp"

namespace emot {

namespace {

const char* criterion_gloss(RubricCriterion criterion) {
    switch (criterion) {
        case RubricCriterion::RecursionDepth:
            return "how thoroughly the problem is decomposed into layered sub-problems";
        case RubricCriterion::DormantThoughtManagement:
            return "whether alternative hypotheses are kept available and revisited rather "
                   "than discarded";
        case RubricCriterion::CrossDomainSynthesis:
            return "how well knowledge from distinct domains is combined into one answer";
        case RubricCriterion::MemoryUtilisation:
            return "whether later reasoning builds coherently on earlier findings";
        case RubricCriterion::StructuredOutput:
            return "organisation, formatting and readability of the output";
        case RubricCriterion::SolutionQuality:
            return "completeness, correctness and actionability of the proposed solution";
    }
    return "";
}

std::string rubric_block() {
    std::string out = "RUBRIC (score each 1-5):\n";
    for (RubricCriterion criterion : all_rubric_criteria()) {
        out += std::string("- ") + criterion_name(criterion) + ": " + criterion_gloss(criterion) +
               "\n";
    }
    return out;
}

std::string reply_contract(bool pair) {
    std::string out =
        "Reply with a block per output: a header line \"Output A:\"";
    if (pair) out += " (then \"Output B:\")";
    out += ", followed by six lines \"<criterion name>: <integer 1-5>\".";
    return out;
}

std::string complete_text(Backend& backend, const std::string& prompt) {
    return backend.complete(CompletionRequest{prompt}).text;
}

}  // namespace

const std::vector<std::string>& method_label_list() {
    static const std::vector<std::string> kLabels = {
        "EMoT", "Chain-of-Thought", "CoT", "Tree-of-Thoughts", "Self-Consistency", "Mycelium",
    };
    return kLabels;
}

std::string strip_method_labels(const std::string& text) {
    std::string out;
    for (const auto& line : split_lines(text)) {
        bool tainted = false;
        for (const auto& label : method_label_list()) {
            if (line.find(label) != std::string::npos) {
                tainted = true;
                break;
            }
        }
        if (tainted) continue;
        out += line;
        out += '\n';
    }
    if (!out.empty()) out.pop_back();
    return out;
}

std::string build_judge_prompt(const std::string& case_prompt, const std::string& output_a,
                               const std::string& output_b) {
    std::ostringstream os;
    os << "JUDGE REQUEST\n"
       << rubric_block() << "CASE:\n"
       << case_prompt << "\nOUTPUT A:\n"
       << output_a << "\nOUTPUT B:\n"
       << output_b << "\nSCORE OUTPUT A\nSCORE OUTPUT B\n"
       << reply_contract(true);
    return os.str();
}

std::string build_single_judge_prompt(const std::string& case_prompt,
                                      const std::string& output_a) {
    std::ostringstream os;
    os << "JUDGE REQUEST\n"
       << rubric_block() << "CASE:\n"
       << case_prompt << "\nOUTPUT A:\n"
       << output_a << "\nSCORE OUTPUT A\n"
       << reply_contract(false);
    return os.str();
}

std::pair<std::string, std::string> split_judge_reply(const std::string& reply) {
    const auto lines = split_lines(reply);
    std::string block_a, block_b;
    int current = 0;
    for (const auto& line : lines) {
        const std::string lowered = to_lower(trim(line));
        if (lowered.rfind("output a", 0) == 0) {
            current = 1;
            continue;
        }
        if (lowered.rfind("output b", 0) == 0) {
            current = 2;
            continue;
        }
        if (current == 1) {
            block_a += line;
            block_a += '\n';
        } else if (current == 2) {
            block_b += line;
            block_b += '\n';
        }
    }
    return {block_a, block_b};
}

Scorecard judge_single(const MethodOutput& output, const std::string& case_id,
                       const std::string& case_prompt, Backend& judge_backend) {
    Scorecard card;
    card.case_id = case_id;
    card.method_blind_label = "A";
    if (trim(output.text).empty()) {
        card.scores = floor_scorecard().scores;
        return card;
    }
    std::string prompt =
        build_single_judge_prompt(case_prompt, strip_method_labels(output.text));
    std::string last_error;
    for (int attempt = 0; attempt < 3; ++attempt) {
        const std::string reply = complete_text(judge_backend, prompt);
        try {
            auto [block_a, block_b] = split_judge_reply(reply);
            card.scores = parse_scores(block_a.empty() ? reply : block_a);
            return card;
        } catch (const Error& e) {
            last_error = e.what();
            prompt += "\nREFORMAT: your previous reply did not follow the contract (" +
                      last_error + "). " + reply_contract(false);
        }
    }
    raise(ErrorCode::JudgeParseFailure, last_error);
}

std::pair<Scorecard, Scorecard> blind_pair_evaluate(const MethodOutput& first,
                                                    const MethodOutput& second,
                                                    const std::string& case_id,
                                                    const std::string& case_prompt,
                                                    Backend& judge_backend, uint64_t seed) {
    const bool first_empty = trim(first.text).empty();
    const bool second_empty = trim(second.text).empty();

    // The floor rule: an empty output never reaches the judge.
    if (first_empty || second_empty) {
        Scorecard card_first = floor_scorecard();
        Scorecard card_second = floor_scorecard();
        card_first.case_id = card_second.case_id = case_id;
        if (!first_empty) card_first = judge_single(first, case_id, case_prompt, judge_backend);
        if (!second_empty) card_second = judge_single(second, case_id, case_prompt, judge_backend);
        card_first.method_blind_label = "A";
        card_second.method_blind_label = "B";
        return {card_first, card_second};
    }

    // Presentation order from the seed, so neither method is always "A".
    const uint64_t h = fnv1a64(std::to_string(seed) + '\x1f' + case_id + '\x1f' + first.method +
                               '\x1f' + second.method);
    const bool first_shown_as_a = (h % 2) == 0;
    const MethodOutput& shown_a = first_shown_as_a ? first : second;
    const MethodOutput& shown_b = first_shown_as_a ? second : first;

    std::string prompt = build_judge_prompt(case_prompt, strip_method_labels(shown_a.text),
                                            strip_method_labels(shown_b.text));
    std::string last_error;
    for (int attempt = 0; attempt < 3; ++attempt) {
        const std::string reply = complete_text(judge_backend, prompt);
        try {
            auto [block_a, block_b] = split_judge_reply(reply);
            Scorecard card_a, card_b;
            card_a.scores = parse_scores(block_a);
            card_b.scores = parse_scores(block_b);
            card_a.case_id = card_b.case_id = case_id;
            card_a.method_blind_label = "A";
            card_b.method_blind_label = "B";
            if (first_shown_as_a) return {card_a, card_b};
            return {card_b, card_a};
        } catch (const Error& e) {
            last_error = e.what();
            prompt += "\nREFORMAT: your previous reply did not follow the contract (" +
                      last_error + "). " + reply_contract(true);
        }
    }
    raise(ErrorCode::JudgeParseFailure, last_error);
}

}  // namespace emot
