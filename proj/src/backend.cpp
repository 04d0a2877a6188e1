#include "emot/backend.hpp"

#include <array>
#include <cstdlib>

#include "emot/errors.hpp"
#include "emot/rubric.hpp"
#include "emot/text.hpp"

namespace emot {

namespace {

// 64 nouns the stub draws pseudo-random phrases from.
constexpr std::array<const char*, 64> kLexicon = {
    "substrate", "lattice",  "cascade",  "signal",   "gradient", "pathway",  "junction",
    "filament",  "spore",    "enzyme",   "membrane", "nutrient", "colony",   "network",
    "taproot",   "branch",   "canopy",   "sediment", "mineral",  "current",  "reservoir",
    "catalyst",  "thread",   "relay",    "buffer",   "circuit",  "sequence", "matrix",
    "horizon",   "stratum",  "conduit",  "vessel",   "pulse",    "rhythm",   "cycle",
    "boundary",  "interface", "terrain", "basin",    "ridge",    "delta",    "estuary",
    "plateau",   "prism",    "spectrum", "antenna",  "beacon",   "compass",  "anchor",
    "keel",      "rudder",   "ballast",  "cargo",    "harbor",   "channel",  "tide",
    "reef",      "lagoon",   "glacier",  "moraine",  "aquifer",  "geyser",   "causeway",
    "quarry",
};

uint64_t stub_hash(uint64_t seed, const std::string& prompt, const std::string& salt) {
    std::string bytes = std::to_string(seed);
    bytes += '\x1f';
    bytes += prompt;
    bytes += '\x1f';
    bytes += salt;
    return fnv1a64(bytes);
}

}  // namespace

const char* backend_kind_name(BackendKind kind) {
    switch (kind) {
        case BackendKind::Anthropic: return "anthropic";
        case BackendKind::Google: return "google";
        case BackendKind::Ollama: return "ollama";
        case BackendKind::Stub: return "stub";
    }
    return "?";
}

std::optional<BackendKind> backend_kind_from_name(const std::string& name) {
    const std::string lower = to_lower(name);
    if (lower == "anthropic") return BackendKind::Anthropic;
    if (lower == "google") return BackendKind::Google;
    if (lower == "ollama") return BackendKind::Ollama;
    if (lower == "stub") return BackendKind::Stub;
    return std::nullopt;
}

std::string default_model_for(BackendKind kind) {
    switch (kind) {
        case BackendKind::Anthropic: return "claude-sonnet-4";
        case BackendKind::Google: return "gemini-2.0-flash";
        case BackendKind::Ollama: return "qwen3:14b";
        case BackendKind::Stub: return "stub";
    }
    return "stub";
}

BackendConfig config_from_env(const std::map<std::string, std::string>& env) {
    BackendConfig config;
    auto it = env.find("MOT_LLM_BACKEND");
    if (it != env.end() && !it->second.empty()) {
        auto kind = backend_kind_from_name(it->second);
        if (!kind) raise(ErrorCode::UnknownBackendName, "MOT_LLM_BACKEND=" + it->second);
        config.kind = *kind;
    } else {
        config.kind = BackendKind::Stub;
    }
    it = env.find("MOT_LLM_MODEL");
    config.model = (it != env.end() && !it->second.empty()) ? it->second
                                                            : default_model_for(config.kind);
    return config;
}

BackendConfig config_from_env() {
    std::map<std::string, std::string> env;
    for (const char* name : {"MOT_LLM_BACKEND", "MOT_LLM_MODEL"}) {
        if (const char* value = std::getenv(name)) env[name] = value;
    }
    return config_from_env(env);
}

std::unique_ptr<Backend> make_backend(const BackendConfig& config) {
    if (config.kind == BackendKind::Stub) return std::make_unique<StubBackend>(config);
    return make_http_backend(config);
}

StubBackend::StubBackend(BackendConfig config) : config_(std::move(config)) {}

double StubBackend::unit_value(uint64_t seed, const std::string& prompt,
                               const std::string& salt) {
    return static_cast<double>(stub_hash(seed, prompt, salt) % 101) / 100.0;
}

std::string StubBackend::phrase(uint64_t seed, const std::string& prompt,
                                const std::string& salt) {
    const uint64_t h = stub_hash(seed, prompt, salt);
    std::string out = kLexicon[h % 64];
    out += ' ';
    out += kLexicon[(h >> 6) % 64];
    out += ' ';
    out += kLexicon[(h >> 12) % 64];
    return out;
}

CompletionResponse StubBackend::complete(const CompletionRequest& request) {
    if (request.prompt.empty()) raise(ErrorCode::EmptyPrompt, "stub completion");
    const uint64_t seed = config_.seed;
    const std::string& prompt = request.prompt;

    std::string text;
    int insight_index = 0;
    bool emitted = false;
    for (const auto& line : split_lines(prompt)) {
        if (line.rfind("ROLE: ", 0) == 0) {
            const std::string tag = line.substr(6);
            text += "INSIGHT: " + tag + " " +
                    phrase(seed, prompt, "insight:" + std::to_string(insight_index++)) + "\n";
            emitted = true;
        } else if (line.rfind("SCORE OUTPUT ", 0) == 0) {
            const std::string label = line.substr(13);
            text += "Output " + label + ":\n";
            for (RubricCriterion criterion : all_rubric_criteria()) {
                const int score = 1 + static_cast<int>(stub_hash(seed, prompt,
                                                                 "judge:" + label + ":" +
                                                                     criterion_name(criterion)) %
                                                       5);
                text += std::string(criterion_name(criterion)) + ": " + std::to_string(score) +
                        "\n";
            }
            emitted = true;
        }
    }
    if (!emitted) {
        text += "SYNTHESIS: " + phrase(seed, prompt, "synthesis") + "\n";
    }
    text += "S=" + format_double(unit_value(seed, prompt, "trust:S"), 2) +
            " N=" + format_double(unit_value(seed, prompt, "trust:N"), 2) +
            " D=" + format_double(unit_value(seed, prompt, "trust:D"), 2) +
            " C=" + format_double(unit_value(seed, prompt, "trust:C"), 2);

    CompletionResponse response;
    response.text = std::move(text);
    response.prompt_tokens = 0;
    response.completion_tokens = 0;
    return response;
}

}  // namespace emot
