#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "emot/backend.hpp"
#include "emot/bench.hpp"
#include "emot/cases.hpp"
#include "emot/engine.hpp"
#include "emot/errors.hpp"
#include "emot/text.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
    std::optional<std::string> backend_name;
    std::optional<std::string> model;
    uint64_t seed = 42;
    int iterations = 3;
    bool no_dormancy = false;
    bool no_memory_palace = false;
    std::string out_dir = "out";
};

void add_common_flags(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--backend", options.backend_name,
                    "Backend kind: anthropic | google | ollama | stub");
    cmd->add_option("--model", options.model, "Model name (defaults per backend)");
    cmd->add_option("--seed", options.seed, "Deterministic seed for the stub backend");
    cmd->add_option("--iterations", options.iterations, "Reasoning iterations per run");
    cmd->add_flag("--no-dormancy", options.no_dormancy, "Disable the dormancy controller");
    cmd->add_flag("--no-memory-palace", options.no_memory_palace, "Disable the memory palace");
    cmd->add_option("--out", options.out_dir, "Output directory for traces and reports");
}

emot::BackendConfig resolve_backend(const CommonOptions& options) {
    emot::BackendConfig config = emot::config_from_env();
    if (options.backend_name) {
        auto kind = emot::backend_kind_from_name(*options.backend_name);
        if (!kind) {
            emot::raise(emot::ErrorCode::UnknownBackendName,
                        "--backend " + *options.backend_name);
        }
        config.kind = *kind;
        config.model = emot::default_model_for(*kind);
    }
    if (options.model) config.model = *options.model;
    config.seed = options.seed;
    return config;
}

emot::EngineConfig resolve_engine(const CommonOptions& options) {
    emot::EngineConfig config;
    config.iterations = options.iterations;
    config.dormancy_enabled = !options.no_dormancy;
    config.memory_palace_enabled = !options.no_memory_palace;
    config.seed = options.seed;
    return config;
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::trunc);
    if (!file.is_open()) {
        emot::raise(emot::ErrorCode::IoError, "cannot write " + path.string());
    }
    file << content;
}

int cmd_run(const CommonOptions& options, const std::string& case_id,
            const std::string& problem_text, const std::string& import_palace,
            const std::string& export_palace) {
    std::string problem = problem_text;
    if (!case_id.empty()) {
        const emot::CaseSpec* spec = emot::find_case(case_id);
        if (!spec) emot::raise(emot::ErrorCode::BadParams, "unknown case id " + case_id);
        problem = spec->prompt;
    }
    if (problem.empty()) {
        emot::raise(emot::ErrorCode::BadParams, "provide a problem text or --case ID");
    }

    auto backend = emot::make_backend(resolve_backend(options));
    emot::EngineConfig engine_config = resolve_engine(options);
    if (!import_palace.empty()) {
        std::ifstream file(import_palace);
        if (!file.is_open()) {
            emot::raise(emot::ErrorCode::IoError, "cannot open palace file " + import_palace);
        }
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(file, line)) lines.push_back(line);
        engine_config.initial_palace = emot::Palace::deserialize(lines, engine_config.palace);
    }

    const fs::path trace_path = fs::path(options.out_dir) / "trace.txt";
    fs::create_directories(trace_path.parent_path());
    engine_config.trace_path = trace_path.string();

    const emot::RunResult result = emot::run_problem(problem, engine_config, *backend);
    if (!export_palace.empty()) {
        std::string palace_text;
        for (const auto& line : result.palace.serialize()) palace_text += line + "\n";
        write_file(fs::path(export_palace), palace_text);
    }

    std::cout << "status: " << emot::run_status_name(result.status) << "\n"
              << "internal_quality: " << emot::format_double(result.internal_quality, 3) << "\n"
              << "insights: " << result.insights.size() << "\n"
              << "llm_calls: " << result.ledger.llm_calls
              << " cache_hits: " << result.ledger.cache_hits
              << " tokens: " << (result.ledger.prompt_tokens + result.ledger.completion_tokens)
              << " cost: $" << emot::format_double(result.estimated_cost, 4) << "\n"
              << "trace: " << trace_path.string() << "\n\n"
              << result.solution.body << "\n";
    return 0;
}

int cmd_bench_quality(const CommonOptions& options, int runs, const std::string& case_id,
                      const std::string& replay_path) {
    emot::QualityReport report;
    if (!replay_path.empty()) {
        report = emot::run_quality_replay(emot::load_replay_fixture(replay_path));
    } else {
        emot::BenchConfig config;
        config.runs = runs;
        config.seed = options.seed;
        config.engine = resolve_engine(options);
        if (!case_id.empty()) config.case_ids = {case_id};
        fs::create_directories(options.out_dir);
        config.trace_dir = options.out_dir;
        auto backend = emot::make_backend(resolve_backend(options));
        auto judge = emot::make_backend(resolve_backend(options));
        report = emot::run_quality_benchmark(config, *backend, *judge);
    }
    const std::string rendered = emot::render_quality_report(report);
    write_file(fs::path(options.out_dir) / "quality_report.md", rendered);
    std::cout << rendered;
    return 0;
}

int cmd_bench_accuracy(const CommonOptions& options, const std::string& replay_path) {
    emot::AccuracyReport report;
    if (!replay_path.empty()) {
        report = emot::run_accuracy_replay(emot::load_replay_fixture(replay_path));
    } else {
        emot::BenchConfig config;
        config.seed = options.seed;
        config.engine = resolve_engine(options);
        fs::create_directories(options.out_dir);
        config.trace_dir = options.out_dir;
        auto backend = emot::make_backend(resolve_backend(options));
        const std::vector<emot::Technique> techniques = {
            {emot::TechniqueKind::Direct},
            {emot::TechniqueKind::CoT},
            {emot::TechniqueKind::SelfConsistency, 5},
            {emot::TechniqueKind::EMoT},
        };
        report = emot::run_accuracy_benchmark(techniques, config, *backend);
    }
    const std::string rendered = emot::render_accuracy_report(report);
    write_file(fs::path(options.out_dir) / "accuracy_report.md", rendered);
    std::cout << rendered;
    return 0;
}

int cmd_ablate(const CommonOptions& options, const std::string& case_id) {
    emot::BenchConfig config;
    config.seed = options.seed;
    config.engine = resolve_engine(options);
    if (!case_id.empty()) config.case_ids = {case_id};
    fs::create_directories(options.out_dir);
    config.trace_dir = options.out_dir;
    auto backend = emot::make_backend(resolve_backend(options));
    auto judge = emot::make_backend(resolve_backend(options));
    const emot::AblationReport report = emot::run_ablation(config, *backend, *judge);
    const std::string rendered = emot::render_ablation_report(report);
    write_file(fs::path(options.out_dir) / "ablation_report.md", rendered);
    std::cout << rendered;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"emot: hierarchical reasoning engine and benchmark harness"};
    app.require_subcommand(1);

    CommonOptions options;
    std::string case_id;
    std::string problem_text;
    std::string replay_path;
    std::string import_palace;
    std::string export_palace;
    int runs = 3;

    CLI::App* run_cmd = app.add_subcommand("run", "Run one problem through the engine");
    add_common_flags(run_cmd, options);
    run_cmd->add_option("--case", case_id, "Bundled case id (e.g. bengt, climate, math-1)");
    run_cmd->add_option("problem", problem_text, "Problem text (alternative to --case)");
    run_cmd->add_option("--import-palace", import_palace, "Seed the memory palace from a file");
    run_cmd->add_option("--export-palace", export_palace, "Write the final palace to a file");

    CLI::App* quality_cmd =
        app.add_subcommand("bench-quality", "Blind-judge quality benchmark (EMoT vs CoT)");
    add_common_flags(quality_cmd, options);
    quality_cmd->add_option("--runs", runs, "Independent runs per condition");
    quality_cmd->add_option("--case", case_id, "Restrict to one case id");
    quality_cmd->add_option("--replay", replay_path, "Replay fixture with recorded judge scores");

    CLI::App* accuracy_cmd =
        app.add_subcommand("bench-accuracy", "Multi-technique short-answer benchmark");
    add_common_flags(accuracy_cmd, options);
    accuracy_cmd->add_option("--replay", replay_path,
                             "Replay fixture with recorded correctness");

    CLI::App* ablate_cmd = app.add_subcommand("ablate", "Ablation rows: full / no-dormancy / "
                                                        "no-memory-palace");
    add_common_flags(ablate_cmd, options);
    ablate_cmd->add_option("--case", case_id, "Restrict to one case id");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            return cmd_run(options, case_id, problem_text, import_palace, export_palace);
        }
        if (quality_cmd->parsed()) {
            return cmd_bench_quality(options, runs, case_id, replay_path);
        }
        if (accuracy_cmd->parsed()) {
            return cmd_bench_accuracy(options, replay_path);
        }
        if (ablate_cmd->parsed()) {
            return cmd_ablate(options, case_id);
        }
    } catch (const emot::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
