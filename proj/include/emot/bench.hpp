#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emot/backend.hpp"
#include "emot/cases.hpp"
#include "emot/engine.hpp"
#include "emot/rubric.hpp"

namespace emot {

enum class TechniqueKind { Direct, CoT, SelfConsistency, EMoT };

const char* technique_name(TechniqueKind kind);
std::optional<TechniqueKind> technique_from_name(const std::string& name);

struct Technique {
    TechniqueKind kind = TechniqueKind::Direct;
    int samples = 5;  // SelfConsistency only; odd by default
};

// First match wins: an "ANSWER:" line; else the last number for the
// numeric categories (math, bbh); else the final non-empty line.
// Throws NoAnswerFound.
std::string extract_answer(const std::string& response_text, const std::string& category);

// Lowercase, trim, strip trailing punctuation; numeric strings lose
// commas and leading zeros.
std::string canonicalize_answer(const std::string& answer);

// Most frequent canonical answer; ties go to the lexicographically
// smallest. Throws BadParams on empty input.
std::string majority_vote(const std::vector<std::string>& answers);

// -------- replay fixtures --------

struct QualityReplayRecord {
    int run = 0;
    std::string case_id;
    std::string method;
    std::array<int, kCriterionCount> scores{};
};

struct AccuracyReplayRecord {
    std::string technique;
    std::string problem_id;
    bool correct = false;
};

struct ReplayFixture {
    std::vector<QualityReplayRecord> quality;
    std::vector<AccuracyReplayRecord> accuracy;
};

ReplayFixture load_replay_fixture(const std::string& path);
ReplayFixture parse_replay_fixture(const std::string& json_text);

// -------- quality benchmark --------

struct MethodQuality {
    std::string method;
    // per run: per case average, case order matching `cases`
    std::vector<std::vector<double>> case_averages;
    std::vector<double> run_overalls;
    std::array<double, kCriterionCount> criterion_means{};
    std::optional<OverallStats> overall;  // set when >= 2 runs
    std::vector<Scorecard> scorecards;    // (run, case) order
    UsageLedger ledger;                   // live runs only
    double estimated_cost = 0.0;
};

struct QualityReport {
    std::vector<std::string> case_ids;
    int runs = 0;
    std::vector<MethodQuality> methods;
};

struct BenchConfig {
    int runs = 3;
    uint64_t seed = 42;
    EngineConfig engine;
    std::vector<std::string> case_ids;  // defaults to bengt/climate/vaccine
    // Blind pairing needs exactly two generable methods ("EMoT", "CoT",
    // "Direct"); anything else is PairingRequired.
    std::vector<std::string> methods = {"EMoT", "CoT"};
    // When set, every engine run inside a live benchmark writes its trace
    // file here (trace_<label>.txt).
    std::optional<std::string> trace_dir;
};

// Replay: aggregates recorded scorecards without any backend.
QualityReport run_quality_replay(const ReplayFixture& fixture);

// Live: produces the EMoT and CoT outputs, judges them blind, and
// aggregates. Exactly two methods are required for blind pairing.
QualityReport run_quality_benchmark(const BenchConfig& config, Backend& backend,
                                    Backend& judge_backend);

std::string render_quality_report(const QualityReport& report);

// -------- accuracy benchmark --------

struct TechniqueAccuracy {
    std::string technique;
    std::map<std::string, int> per_category_correct;
    std::map<std::string, int> per_category_total;
    int correct = 0;
    int total = 0;
    int percentage = 0;  // half-up, 0 decimals
    UsageLedger ledger;
    double estimated_cost = 0.0;
    std::vector<std::pair<std::string, bool>> outcomes;  // (problem id, correct)
};

struct AccuracyReport {
    std::vector<TechniqueAccuracy> techniques;
};

AccuracyReport run_accuracy_replay(const ReplayFixture& fixture);
AccuracyReport run_accuracy_benchmark(const std::vector<Technique>& techniques,
                                      const BenchConfig& config, Backend& backend);

std::string render_accuracy_report(const AccuracyReport& report);

// -------- ablation --------

struct AblationRow {
    std::string configuration;
    double overall = 0.0;
};

struct AblationReport {
    std::vector<AblationRow> rows;  // full, no-dormancy, no-memory-palace
};

AblationReport run_ablation(const BenchConfig& config, Backend& backend, Backend& judge_backend);
std::string render_ablation_report(const AblationReport& report);

// Prompt builders shared between benchmarks.
std::string direct_prompt(const std::string& problem);
std::string cot_prompt(const std::string& problem);

}  // namespace emot
