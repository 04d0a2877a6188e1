#include "emot/bench.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "emot/errors.hpp"
#include "emot/judge.hpp"
#include "emot/optimizer.hpp"
#include "emot/text.hpp"

namespace emot {

namespace {

using nlohmann::json;

const std::vector<std::string>& accuracy_categories() {
    static const std::vector<std::string> kCategories = {"math", "logic", "multiqa", "planning",
                                                         "bbh"};
    return kCategories;
}

bool numeric_category(const std::string& category) {
    return category == "math" || category == "bbh";
}

bool looks_numeric(const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i >= s.size()) return false;
    bool digit_seen = false, dot_seen = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digit_seen = true;
        } else if (s[i] == ',') {
            continue;
        } else if (s[i] == '.' && !dot_seen) {
            dot_seen = true;
        } else {
            return false;
        }
    }
    return digit_seen;
}

std::string normalize_numeric(std::string s) {
    std::string no_commas;
    for (char c : s) {
        if (c != ',') no_commas += c;
    }
    std::string sign;
    if (!no_commas.empty() && no_commas[0] == '-') {
        sign = "-";
        no_commas.erase(0, 1);
    }
    size_t start = 0;
    while (start + 1 < no_commas.size() && no_commas[start] == '0' &&
           std::isdigit(static_cast<unsigned char>(no_commas[start + 1]))) {
        ++start;
    }
    return sign + no_commas.substr(start);
}

// Last number appearing in the text, commas allowed inside.
std::optional<std::string> last_number(const std::string& text) {
    std::optional<std::string> found;
    size_t i = 0;
    while (i < text.size()) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            size_t begin = i;
            if (begin > 0 && text[begin - 1] == '-') --begin;
            size_t end = i;
            bool dot_seen = false;
            while (end < text.size()) {
                const char c = text[end];
                if (std::isdigit(static_cast<unsigned char>(c)) || c == ',') {
                    ++end;
                } else if (c == '.' && !dot_seen && end + 1 < text.size() &&
                           std::isdigit(static_cast<unsigned char>(text[end + 1]))) {
                    dot_seen = true;
                    ++end;
                } else {
                    break;
                }
            }
            found = text.substr(begin, end - begin);
            i = end;
        } else {
            ++i;
        }
    }
    return found;
}

struct MethodState {
    std::string method;
    std::vector<Scorecard> scorecards;
    SharedLedger ledger;
};

// Live generation for one method on one case.
std::string generate_output(const std::string& method, const CaseSpec& spec,
                            const BenchConfig& config, Backend& backend, uint64_t run_seed,
                            SharedLedger& ledger, UsageLedger* engine_ledger,
                            const std::string& trace_label) {
    if (method == "EMoT") {
        EngineConfig engine_config = config.engine;
        engine_config.seed = run_seed;
        if (config.trace_dir) {
            engine_config.trace_path = *config.trace_dir + "/trace_" + trace_label + ".txt";
        }
        BackendConfig backend_config = backend.config();
        backend_config.seed = run_seed;
        auto run_backend = make_backend(backend_config);
        RunResult result = run_problem(spec.prompt, engine_config, *run_backend);
        if (engine_ledger) {
            engine_ledger->llm_calls += result.ledger.llm_calls;
            engine_ledger->cache_hits += result.ledger.cache_hits;
            engine_ledger->prompt_tokens += result.ledger.prompt_tokens;
            engine_ledger->completion_tokens += result.ledger.completion_tokens;
            engine_ledger->wall_seconds += result.ledger.wall_seconds;
        }
        return result.solution.body;
    }
    const std::string prompt =
        method == "CoT" ? cot_prompt(spec.prompt) : direct_prompt(spec.prompt);
    const CompletionResponse response = backend.complete(CompletionRequest{prompt});
    ledger.record_call(response.prompt_tokens, response.completion_tokens, 0.0);
    return response.text;
}

MethodQuality aggregate_method(const std::string& method, int runs,
                               const std::vector<std::string>& case_ids,
                               const std::vector<Scorecard>& cards) {
    MethodQuality out;
    out.method = method;
    out.scorecards = cards;
    for (int run = 1; run <= runs; ++run) {
        std::vector<double> case_avgs;
        for (const auto& case_id : case_ids) {
            const Scorecard* match = nullptr;
            for (const auto& card : cards) {
                if (card.run_index == run && card.case_id == case_id) {
                    match = &card;
                    break;
                }
            }
            if (!match)
                raise(ErrorCode::BadParams,
                      "missing scorecard for method " + method + " run " + std::to_string(run) +
                          " case " + case_id);
            case_avgs.push_back(aggregate_case(*match));
        }
        out.case_averages.push_back(case_avgs);
        out.run_overalls.push_back(aggregate_run(case_avgs));
    }
    out.criterion_means = per_criterion_means(cards);
    if (runs >= 2) out.overall = aggregate_overall(out.run_overalls);
    return out;
}

json raw_quality_json(const QualityReport& report) {
    json raw = json::array();
    for (const auto& method : report.methods) {
        for (const auto& card : method.scorecards) {
            json scores = json::array();
            for (int s : card.scores) scores.push_back(s);
            raw.push_back({{"run", card.run_index},
                           {"case", card.case_id},
                           {"method", method.method},
                           {"scores", scores}});
        }
    }
    return raw;
}

}  // namespace

const char* technique_name(TechniqueKind kind) {
    switch (kind) {
        case TechniqueKind::Direct: return "Direct";
        case TechniqueKind::CoT: return "CoT";
        case TechniqueKind::SelfConsistency: return "Self-Consistency";
        case TechniqueKind::EMoT: return "EMoT";
    }
    return "?";
}

std::optional<TechniqueKind> technique_from_name(const std::string& name) {
    for (TechniqueKind kind : {TechniqueKind::Direct, TechniqueKind::CoT,
                               TechniqueKind::SelfConsistency, TechniqueKind::EMoT}) {
        if (name == technique_name(kind)) return kind;
    }
    return std::nullopt;
}

std::string direct_prompt(const std::string& problem) { return problem; }

std::string cot_prompt(const std::string& problem) {
    return problem +
           "\n\nWork through this step by step, explaining your reasoning, then finish with a "
           "line of the form \"ANSWER: <final answer>\".";
}

std::string canonicalize_answer(const std::string& answer) {
    std::string s = to_lower(trim(answer));
    while (!s.empty() && std::string(".,!?;:").find(s.back()) != std::string::npos) {
        s.pop_back();
        s = trim(s);
    }
    if (looks_numeric(s)) s = normalize_numeric(s);
    return s;
}

std::string extract_answer(const std::string& response_text, const std::string& category) {
    const auto lines = split_lines(response_text);

    // Rule 1: an explicit ANSWER line; the last one is the final answer.
    std::optional<std::string> answer_line;
    for (const auto& raw : lines) {
        const std::string line = trim(raw);
        if (to_lower(line).rfind("answer:", 0) == 0) {
            const std::string value = trim(line.substr(7));
            if (!value.empty()) answer_line = value;
        }
    }
    if (answer_line) return canonicalize_answer(*answer_line);

    // Rule 2: last number for the numeric categories.
    if (numeric_category(category)) {
        if (auto number = last_number(response_text)) return canonicalize_answer(*number);
        raise(ErrorCode::NoAnswerFound, "no number in response");
    }

    // Rule 3: final non-empty line.
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        const std::string line = trim(*it);
        if (!line.empty()) return canonicalize_answer(line);
    }
    raise(ErrorCode::NoAnswerFound, "empty response");
}

std::string majority_vote(const std::vector<std::string>& answers) {
    if (answers.empty()) raise(ErrorCode::BadParams, "majority vote over no answers");
    std::map<std::string, int> counts;
    for (const auto& a : answers) counts[canonicalize_answer(a)] += 1;
    std::string best;
    int best_count = -1;
    for (const auto& [answer, count] : counts) {
        if (count > best_count) {  // map order makes ties lexicographic
            best = answer;
            best_count = count;
        }
    }
    return best;
}

ReplayFixture parse_replay_fixture(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        raise(ErrorCode::BadParams, std::string("replay fixture is not valid JSON: ") + e.what());
    }
    ReplayFixture fixture;
    if (doc.contains("quality")) {
        for (const auto& record : doc["quality"]) {
            QualityReplayRecord q;
            q.run = record.at("run").get<int>();
            q.case_id = record.at("case").get<std::string>();
            q.method = record.at("method").get<std::string>();
            const auto& scores = record.at("scores");
            if (scores.size() != kCriterionCount)
                raise(ErrorCode::BadParams, "quality record needs six scores");
            for (size_t i = 0; i < kCriterionCount; ++i) q.scores[i] = scores[i].get<int>();
            fixture.quality.push_back(std::move(q));
        }
    }
    if (doc.contains("accuracy")) {
        for (const auto& record : doc["accuracy"]) {
            AccuracyReplayRecord a;
            a.technique = record.at("technique").get<std::string>();
            a.problem_id = record.at("problem").get<std::string>();
            a.correct = record.at("correct").get<bool>();
            fixture.accuracy.push_back(std::move(a));
        }
    }
    return fixture;
}

ReplayFixture load_replay_fixture(const std::string& path) {
    std::ifstream file(path);
    if (!file.is_open()) raise(ErrorCode::IoError, "cannot open replay fixture " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_replay_fixture(buffer.str());
}

QualityReport run_quality_replay(const ReplayFixture& fixture) {
    if (fixture.quality.empty()) raise(ErrorCode::BadParams, "fixture has no quality records");

    QualityReport report;
    std::vector<std::string> methods;
    for (const auto& record : fixture.quality) {
        if (std::find(report.case_ids.begin(), report.case_ids.end(), record.case_id) ==
            report.case_ids.end()) {
            report.case_ids.push_back(record.case_id);
        }
        if (std::find(methods.begin(), methods.end(), record.method) == methods.end()) {
            methods.push_back(record.method);
        }
        report.runs = std::max(report.runs, record.run);
    }

    for (const auto& method : methods) {
        std::vector<Scorecard> cards;
        for (const auto& record : fixture.quality) {
            if (record.method != method) continue;
            Scorecard card;
            card.scores = record.scores;
            card.case_id = record.case_id;
            card.run_index = record.run;
            cards.push_back(std::move(card));
        }
        report.methods.push_back(aggregate_method(method, report.runs, report.case_ids, cards));
    }
    return report;
}

QualityReport run_quality_benchmark(const BenchConfig& config, Backend& backend,
                                    Backend& judge_backend) {
    const std::vector<std::string>& methods = config.methods;
    if (methods.size() != 2)
        raise(ErrorCode::PairingRequired, "blind pairing needs exactly two methods, got " +
                                              std::to_string(methods.size()));
    for (const auto& method : methods) {
        if (method != "EMoT" && method != "CoT" && method != "Direct")
            raise(ErrorCode::BadParams, "no generator for method " + method);
    }

    std::vector<std::string> case_ids = config.case_ids;
    if (case_ids.empty()) case_ids = {"bengt", "climate", "vaccine"};

    QualityReport report;
    report.case_ids = case_ids;
    report.runs = config.runs;

    std::map<std::string, std::vector<Scorecard>> cards;
    std::map<std::string, UsageLedger> ledgers;

    for (int run = 1; run <= config.runs; ++run) {
        for (size_t case_index = 0; case_index < case_ids.size(); ++case_index) {
            const CaseSpec* spec = find_case(case_ids[case_index]);
            if (!spec) raise(ErrorCode::BadParams, "unknown case " + case_ids[case_index]);

            const uint64_t run_seed =
                config.seed + static_cast<uint64_t>(run - 1) * 1000 + case_index;
            std::vector<MethodOutput> outputs;
            for (const auto& method : methods) {
                SharedLedger call_ledger;
                UsageLedger engine_ledger;
                const std::string label =
                    "run" + std::to_string(run) + "_" + spec->id + "_" + method;
                const std::string text =
                    generate_output(method, *spec, config, backend, run_seed, call_ledger,
                                    &engine_ledger, label);
                UsageLedger& total = ledgers[method];
                const UsageLedger calls = call_ledger.snapshot();
                total.llm_calls += calls.llm_calls + engine_ledger.llm_calls;
                total.cache_hits += calls.cache_hits + engine_ledger.cache_hits;
                total.prompt_tokens += calls.prompt_tokens + engine_ledger.prompt_tokens;
                total.completion_tokens +=
                    calls.completion_tokens + engine_ledger.completion_tokens;
                total.wall_seconds += calls.wall_seconds + engine_ledger.wall_seconds;
                outputs.push_back({method, text});
            }

            const uint64_t judge_seed =
                config.seed + static_cast<uint64_t>(run) * 97 + case_index;
            auto [card_first, card_second] =
                blind_pair_evaluate(outputs[0], outputs[1], spec->id, spec->prompt,
                                    judge_backend, judge_seed);
            card_first.run_index = run;
            card_second.run_index = run;
            cards[methods[0]].push_back(card_first);
            cards[methods[1]].push_back(card_second);
        }
    }

    for (const auto& method : methods) {
        MethodQuality quality =
            aggregate_method(method, config.runs, case_ids, cards[method]);
        quality.ledger = ledgers[method];
        quality.estimated_cost = estimate_cost(quality.ledger, config.engine.cost_model);
        quality.ledger.estimated_cost = quality.estimated_cost;
        report.methods.push_back(std::move(quality));
    }
    return report;
}

std::string render_quality_report(const QualityReport& report) {
    std::ostringstream os;
    os << "# Quality benchmark (blind judge)\n\n";

    os << "## Per-run overall scores\n\n| Run |";
    for (const auto& m : report.methods) os << ' ' << m.method << " |";
    os << "\n|---|";
    for (size_t i = 0; i < report.methods.size(); ++i) os << "---|";
    os << '\n';
    for (int run = 1; run <= report.runs; ++run) {
        os << "| " << run << " |";
        for (const auto& m : report.methods)
            os << ' ' << format_double(m.run_overalls[static_cast<size_t>(run - 1)], 2) << " |";
        os << '\n';
    }
    os << "| Mean (SD) |";
    for (const auto& m : report.methods) {
        if (m.overall) {
            os << ' ' << format_double(m.overall->mean, 2) << " ("
               << format_double(m.overall->sd, 2) << ") |";
        } else {
            os << " - |";
        }
    }
    os << "\n\n";

    os << "## Per-criterion means\n\n| Criterion |";
    for (const auto& m : report.methods) os << ' ' << m.method << " |";
    os << "\n|---|";
    for (size_t i = 0; i < report.methods.size(); ++i) os << "---|";
    os << '\n';
    for (RubricCriterion criterion : all_rubric_criteria()) {
        os << "| " << criterion_name(criterion) << " |";
        for (const auto& m : report.methods)
            os << ' '
               << format_double(m.criterion_means[static_cast<size_t>(criterion)], 1) << " |";
        os << '\n';
    }
    os << '\n';

    os << "## Per-case averages\n\n| Run | Case |";
    for (const auto& m : report.methods) os << ' ' << m.method << " |";
    os << "\n|---|---|";
    for (size_t i = 0; i < report.methods.size(); ++i) os << "---|";
    os << '\n';
    for (int run = 1; run <= report.runs; ++run) {
        for (size_t c = 0; c < report.case_ids.size(); ++c) {
            os << "| " << run << " | " << report.case_ids[c] << " |";
            for (const auto& m : report.methods)
                os << ' '
                   << format_double(m.case_averages[static_cast<size_t>(run - 1)][c], 2)
                   << " |";
            os << '\n';
        }
    }
    os << '\n';

    bool any_ledger = false;
    for (const auto& m : report.methods) any_ledger |= m.ledger.requests() > 0;
    if (any_ledger) {
        os << "## Usage\n\n| Method | LLM calls | Cache hits | Tokens | Seconds | Cost |\n"
           << "|---|---|---|---|---|---|\n";
        for (const auto& m : report.methods) {
            os << "| " << m.method << " | " << m.ledger.llm_calls << " | "
               << m.ledger.cache_hits << " | "
               << (m.ledger.prompt_tokens + m.ledger.completion_tokens) << " | "
               << format_double(m.ledger.wall_seconds, 1) << " | $"
               << format_double(m.estimated_cost, 2) << " |\n";
        }
        os << '\n';
    }

    os << "## Raw scores\n\nNote: overall means and SDs are computed over per-run overalls "
          "rounded to one decimal first.\n\n```json\n"
       << raw_quality_json(report).dump(1) << "\n```\n";
    return os.str();
}

AccuracyReport run_accuracy_replay(const ReplayFixture& fixture) {
    if (fixture.accuracy.empty()) raise(ErrorCode::BadParams, "fixture has no accuracy records");

    AccuracyReport report;
    std::vector<std::string> techniques;
    for (const auto& record : fixture.accuracy) {
        if (std::find(techniques.begin(), techniques.end(), record.technique) ==
            techniques.end()) {
            techniques.push_back(record.technique);
        }
    }
    for (const auto& technique : techniques) {
        TechniqueAccuracy acc;
        acc.technique = technique;
        for (const auto& record : fixture.accuracy) {
            if (record.technique != technique) continue;
            const CaseSpec* spec = find_case(record.problem_id);
            if (!spec || !spec->gold)
                raise(ErrorCode::BadParams, "unknown accuracy problem " + record.problem_id);
            acc.per_category_total[spec->category] += 1;
            acc.total += 1;
            if (record.correct) {
                acc.per_category_correct[spec->category] += 1;
                acc.correct += 1;
            }
            acc.outcomes.emplace_back(record.problem_id, record.correct);
        }
        acc.percentage = static_cast<int>(
            round_half_up(100.0 * acc.correct / static_cast<double>(acc.total), 0));
        report.techniques.push_back(std::move(acc));
    }
    return report;
}

AccuracyReport run_accuracy_benchmark(const std::vector<Technique>& techniques,
                                      const BenchConfig& config, Backend& backend) {
    AccuracyReport report;
    for (const auto& technique : techniques) {
        if (technique.kind == TechniqueKind::SelfConsistency && technique.samples < 1)
            raise(ErrorCode::BadParams, "self-consistency needs at least one sample");
        TechniqueAccuracy acc;
        acc.technique = technique_name(technique.kind);
        SharedLedger call_ledger;
        UsageLedger engine_ledger;

        size_t problem_index = 0;
        for (const auto& problem : accuracy_problems()) {
            if (!problem.gold) raise(ErrorCode::BadParams, problem.id + " has no gold answer");
            std::optional<std::string> answer;
            try {
                switch (technique.kind) {
                    case TechniqueKind::Direct: {
                        const auto response =
                            backend.complete(CompletionRequest{direct_prompt(problem.prompt)});
                        call_ledger.record_call(response.prompt_tokens,
                                                response.completion_tokens, 0.0);
                        answer = extract_answer(response.text, problem.category);
                        break;
                    }
                    case TechniqueKind::CoT: {
                        const auto response =
                            backend.complete(CompletionRequest{cot_prompt(problem.prompt)});
                        call_ledger.record_call(response.prompt_tokens,
                                                response.completion_tokens, 0.0);
                        answer = extract_answer(response.text, problem.category);
                        break;
                    }
                    case TechniqueKind::SelfConsistency: {
                        std::vector<std::string> answers;
                        for (int sample = 0; sample < technique.samples; ++sample) {
                            const std::string prompt = cot_prompt(problem.prompt) +
                                                       "\nSAMPLE: " + std::to_string(sample);
                            const auto response = backend.complete(
                                CompletionRequest{prompt, 1024, 0.7});
                            call_ledger.record_call(response.prompt_tokens,
                                                    response.completion_tokens, 0.0);
                            try {
                                answers.push_back(
                                    extract_answer(response.text, problem.category));
                            } catch (const Error&) {
                                // a sample with no extractable answer casts no vote
                            }
                        }
                        if (!answers.empty()) answer = majority_vote(answers);
                        break;
                    }
                    case TechniqueKind::EMoT: {
                        EngineConfig engine_config = config.engine;
                        engine_config.seed = config.seed + problem_index;
                        if (config.trace_dir) {
                            engine_config.trace_path =
                                *config.trace_dir + "/trace_" + problem.id + "_EMoT.txt";
                        }
                        BackendConfig backend_config = backend.config();
                        backend_config.seed = engine_config.seed;
                        auto run_backend = make_backend(backend_config);
                        RunResult result =
                            run_problem(problem.prompt, engine_config, *run_backend);
                        engine_ledger.llm_calls += result.ledger.llm_calls;
                        engine_ledger.cache_hits += result.ledger.cache_hits;
                        engine_ledger.prompt_tokens += result.ledger.prompt_tokens;
                        engine_ledger.completion_tokens += result.ledger.completion_tokens;
                        engine_ledger.wall_seconds += result.ledger.wall_seconds;
                        if (!result.solution.body.empty()) {
                            answer = extract_answer(result.solution.body, problem.category);
                        }
                        break;
                    }
                }
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NoAnswerFound) throw;
                answer.reset();  // scored incorrect
            }

            const bool correct =
                answer.has_value() && *answer == canonicalize_answer(*problem.gold);
            acc.per_category_total[problem.category] += 1;
            acc.total += 1;
            if (correct) {
                acc.per_category_correct[problem.category] += 1;
                acc.correct += 1;
            }
            acc.outcomes.emplace_back(problem.id, correct);
            ++problem_index;
        }

        const UsageLedger calls = call_ledger.snapshot();
        acc.ledger.llm_calls = calls.llm_calls + engine_ledger.llm_calls;
        acc.ledger.cache_hits = calls.cache_hits + engine_ledger.cache_hits;
        acc.ledger.prompt_tokens = calls.prompt_tokens + engine_ledger.prompt_tokens;
        acc.ledger.completion_tokens = calls.completion_tokens + engine_ledger.completion_tokens;
        acc.ledger.wall_seconds = calls.wall_seconds + engine_ledger.wall_seconds;
        acc.estimated_cost = estimate_cost(acc.ledger, config.engine.cost_model);
        acc.ledger.estimated_cost = acc.estimated_cost;
        acc.percentage = static_cast<int>(
            round_half_up(100.0 * acc.correct / static_cast<double>(acc.total), 0));
        report.techniques.push_back(std::move(acc));
    }
    return report;
}

std::string render_accuracy_report(const AccuracyReport& report) {
    std::ostringstream os;
    os << "# Accuracy benchmark\n\n## Correct answers per category\n\n| Technique |";
    for (const auto& category : accuracy_categories()) os << ' ' << category << " |";
    os << " Total |\n|---|";
    for (size_t i = 0; i < accuracy_categories().size(); ++i) os << "---|";
    os << "---|\n";
    for (const auto& technique : report.techniques) {
        os << "| " << technique.technique << " |";
        for (const auto& category : accuracy_categories()) {
            const int correct = technique.per_category_correct.count(category)
                                    ? technique.per_category_correct.at(category)
                                    : 0;
            const int total = technique.per_category_total.count(category)
                                  ? technique.per_category_total.at(category)
                                  : 0;
            os << ' ' << correct << '/' << total << " |";
        }
        os << ' ' << technique.correct << '/' << technique.total << " (" << technique.percentage
           << "%) |\n";
    }
    os << '\n';

    bool any_ledger = false;
    for (const auto& t : report.techniques) any_ledger |= t.ledger.requests() > 0;
    if (any_ledger) {
        os << "## Efficiency\n\n| Technique | Avg tokens | Avg time | Cost |\n"
           << "|---|---|---|---|\n";
        for (const auto& t : report.techniques) {
            const double problems = t.total > 0 ? static_cast<double>(t.total) : 1.0;
            os << "| " << t.technique << " | "
               << format_double(static_cast<double>(t.ledger.prompt_tokens +
                                                    t.ledger.completion_tokens) /
                                    problems,
                                0)
               << " | " << format_double(t.ledger.wall_seconds / problems, 1) << "s | $"
               << format_double(t.estimated_cost, 2) << " |\n";
        }
        os << '\n';
    }

    os << "## Raw outcomes\n\n```json\n";
    json raw = json::array();
    for (const auto& t : report.techniques) {
        for (const auto& [problem, correct] : t.outcomes) {
            raw.push_back({{"technique", t.technique}, {"problem", problem},
                           {"correct", correct}});
        }
    }
    os << raw.dump(1) << "\n```\n";
    return os.str();
}

AblationReport run_ablation(const BenchConfig& config, Backend& backend,
                            Backend& judge_backend) {
    std::vector<std::string> case_ids = config.case_ids;
    if (case_ids.empty()) case_ids = {"bengt", "climate", "vaccine"};

    struct Row {
        std::string name;
        bool dormancy;
        bool memory;
    };
    const Row rows[] = {
        {"Full EMoT", true, true},
        {"No Dormancy (--no-dormancy)", false, true},
        {"No Memory Palace (--no-memory-palace)", true, false},
    };

    AblationReport report;
    for (const auto& row : rows) {
        std::vector<double> case_avgs;
        for (size_t case_index = 0; case_index < case_ids.size(); ++case_index) {
            const CaseSpec* spec = find_case(case_ids[case_index]);
            if (!spec) raise(ErrorCode::BadParams, "unknown case " + case_ids[case_index]);

            EngineConfig engine_config = config.engine;
            engine_config.dormancy_enabled = row.dormancy;
            engine_config.memory_palace_enabled = row.memory;
            engine_config.seed = config.seed + case_index;
            if (config.trace_dir) {
                std::string slug;
                for (char c : row.name) slug += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                engine_config.trace_path =
                    *config.trace_dir + "/trace_" + slug + "_" + spec->id + ".txt";
            }
            BackendConfig backend_config = backend.config();
            backend_config.seed = engine_config.seed;
            auto run_backend = make_backend(backend_config);
            RunResult result = run_problem(spec->prompt, engine_config, *run_backend);

            Scorecard card = judge_single({"EMoT", result.solution.body}, spec->id,
                                          spec->prompt, judge_backend);
            case_avgs.push_back(aggregate_case(card));
        }
        report.rows.push_back({row.name, aggregate_run(case_avgs)});
    }
    return report;
}

std::string render_ablation_report(const AblationReport& report) {
    std::ostringstream os;
    os << "# Ablation study\n\n| Configuration | Overall score | Delta from full |\n"
       << "|---|---|---|\n";
    const double full = report.rows.empty() ? 0.0 : report.rows.front().overall;
    for (size_t i = 0; i < report.rows.size(); ++i) {
        os << "| " << report.rows[i].configuration << " | "
           << format_double(report.rows[i].overall, 2) << " | ";
        if (i == 0) {
            os << "-";
        } else {
            const double delta = report.rows[i].overall - full;
            if (delta >= 0) os << '+';
            os << format_double(delta, 2);
        }
        os << " |\n";
    }
    return os.str();
}

}  // namespace emot
