#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace emot {

enum class BackendKind { Anthropic, Google, Ollama, Stub };

const char* backend_kind_name(BackendKind kind);
std::optional<BackendKind> backend_kind_from_name(const std::string& name);  // case-insensitive
std::string default_model_for(BackendKind kind);

struct BackendConfig {
    BackendKind kind = BackendKind::Stub;
    std::string model = "stub";
    uint64_t seed = 0;          // stub only
    double timeout_seconds = 60.0;
    int max_retries = 3;
    double backoff_seconds = 1.0;  // doubled per retry
    std::string base_url;          // optional override for HTTP providers
    std::string api_key;           // optional; falls back to the provider's env var
};

struct CompletionRequest {
    std::string prompt;
    int max_output = 1024;
    double temperature = 0.0;
};

struct CompletionResponse {
    std::string text;
    int prompt_tokens = 0;
    int completion_tokens = 0;
};

class Backend {
public:
    virtual ~Backend() = default;
    virtual CompletionResponse complete(const CompletionRequest& request) = 0;
    virtual const BackendConfig& config() const = 0;
};

// Reads MOT_LLM_BACKEND (case-insensitive; absent means stub) and
// MOT_LLM_MODEL (absent means the kind's default model).
// Throws UnknownBackendName.
BackendConfig config_from_env(const std::map<std::string, std::string>& env);
BackendConfig config_from_env();  // reads the process environment

std::unique_ptr<Backend> make_backend(const BackendConfig& config);

// Template-based backend for tests and development: replies are a pure
// function of (seed, prompt). Each "ROLE: <tag>" line in the prompt
// yields one "INSIGHT: <tag> <phrase>" line; each "SCORE OUTPUT <L>"
// line yields a six-criterion rubric block; a trust line
// "S=a N=b D=c C=d" always closes the reply. Token counts are 0.
class StubBackend : public Backend {
public:
    explicit StubBackend(BackendConfig config);

    CompletionResponse complete(const CompletionRequest& request) override;
    const BackendConfig& config() const override { return config_; }

    // (hash(seed, prompt, salt) mod 101) / 100
    static double unit_value(uint64_t seed, const std::string& prompt, const std::string& salt);
    static std::string phrase(uint64_t seed, const std::string& prompt, const std::string& salt);

private:
    BackendConfig config_;
};

// Provider-backed HTTP backend (Anthropic, Google, Ollama). Declared
// here, implemented in backend_http.cpp.
std::unique_ptr<Backend> make_http_backend(const BackendConfig& config);

}  // namespace emot
