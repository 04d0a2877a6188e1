#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "emot/backend.hpp"
#include "emot/errors.hpp"

namespace emot {

namespace {

using nlohmann::json;

std::string body_excerpt(const std::string& body) {
    constexpr size_t kMax = 200;
    if (body.size() <= kMax) return body;
    return body.substr(0, kMax) + "...";
}

std::string env_or_empty(const char* name) {
    const char* value = std::getenv(name);
    return value ? value : "";
}

struct ProviderCall {
    std::string path;
    httplib::Headers headers;
    std::string body;
};

class HttpBackend : public Backend {
public:
    explicit HttpBackend(BackendConfig config) : config_(std::move(config)) {
        switch (config_.kind) {
            case BackendKind::Anthropic:
                base_url_ = config_.base_url.empty() ? "https://api.anthropic.com"
                                                     : config_.base_url;
                break;
            case BackendKind::Google:
                base_url_ = config_.base_url.empty() ? "https://generativelanguage.googleapis.com"
                                                     : config_.base_url;
                break;
            case BackendKind::Ollama: {
                std::string host = env_or_empty("OLLAMA_HOST");
                if (!config_.base_url.empty()) host = config_.base_url;
                base_url_ = host.empty() ? "http://localhost:11434" : host;
                break;
            }
            case BackendKind::Stub:
                raise(ErrorCode::BadParams, "stub is not an HTTP backend");
        }
    }

    CompletionResponse complete(const CompletionRequest& request) override {
        if (request.prompt.empty()) raise(ErrorCode::EmptyPrompt, "http completion");
        const ProviderCall call = build_call(request);

        std::string last_error = "no attempt made";
        bool timed_out = false;
        for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
            if (attempt > 0) {
                const double delay = config_.backoff_seconds * static_cast<double>(1 << (attempt - 1));
                std::this_thread::sleep_for(std::chrono::duration<double>(delay));
            }
            httplib::Client client(base_url_);
            client.set_connection_timeout(std::chrono::duration<double>(config_.timeout_seconds));
            client.set_read_timeout(std::chrono::duration<double>(config_.timeout_seconds));
            client.set_write_timeout(std::chrono::duration<double>(config_.timeout_seconds));

            auto result = client.Post(call.path, call.headers, call.body, "application/json");
            if (!result) {
                timed_out = result.error() == httplib::Error::ConnectionTimeout ||
                            result.error() == httplib::Error::Read ||
                            result.error() == httplib::Error::Write;
                last_error = httplib::to_string(result.error());
                continue;  // transport failures are retried
            }
            if (result->status == 429 || result->status >= 500) {
                timed_out = false;
                last_error = "status " + std::to_string(result->status) + ": " +
                             body_excerpt(result->body);
                continue;
            }
            if (result->status < 200 || result->status >= 300) {
                raise(ErrorCode::ProviderError, "status " + std::to_string(result->status) +
                                                    ": " + body_excerpt(result->body));
            }
            return parse_reply(result->body);
        }
        if (timed_out) raise(ErrorCode::Timeout, last_error);
        raise(ErrorCode::ProviderError, last_error);
    }

    const BackendConfig& config() const override { return config_; }

private:
    ProviderCall build_call(const CompletionRequest& request) const {
        ProviderCall call;
        switch (config_.kind) {
            case BackendKind::Anthropic: {
                std::string key = config_.api_key.empty() ? env_or_empty("ANTHROPIC_API_KEY")
                                                          : config_.api_key;
                call.path = "/v1/messages";
                call.headers = {{"x-api-key", key}, {"anthropic-version", "2023-06-01"}};
                json body = {
                    {"model", config_.model},
                    {"max_tokens", request.max_output},
                    {"temperature", request.temperature},
                    {"messages", json::array({{{"role", "user"}, {"content", request.prompt}}})},
                };
                call.body = body.dump();
                break;
            }
            case BackendKind::Google: {
                std::string key = config_.api_key;
                if (key.empty()) key = env_or_empty("GEMINI_API_KEY");
                if (key.empty()) key = env_or_empty("GOOGLE_API_KEY");
                call.path = "/v1beta/models/" + config_.model + ":generateContent?key=" + key;
                json body = {
                    {"contents",
                     json::array({{{"parts", json::array({{{"text", request.prompt}}})}}})},
                    {"generationConfig",
                     {{"temperature", request.temperature},
                      {"maxOutputTokens", request.max_output}}},
                };
                call.body = body.dump();
                break;
            }
            case BackendKind::Ollama: {
                call.path = "/api/generate";
                json body = {
                    {"model", config_.model},
                    {"prompt", request.prompt},
                    {"stream", false},
                    {"options",
                     {{"temperature", request.temperature}, {"num_predict", request.max_output}}},
                };
                call.body = body.dump();
                break;
            }
            case BackendKind::Stub:
                break;
        }
        return call;
    }

    CompletionResponse parse_reply(const std::string& body) const {
        json reply;
        try {
            reply = json::parse(body);
        } catch (const json::exception& e) {
            raise(ErrorCode::ProviderError, std::string("bad JSON reply: ") + e.what());
        }
        CompletionResponse out;
        try {
            switch (config_.kind) {
                case BackendKind::Anthropic:
                    out.text = reply.at("content").at(0).at("text").get<std::string>();
                    out.prompt_tokens = reply.at("usage").value("input_tokens", 0);
                    out.completion_tokens = reply.at("usage").value("output_tokens", 0);
                    break;
                case BackendKind::Google: {
                    const auto& candidate = reply.at("candidates").at(0);
                    out.text =
                        candidate.at("content").at("parts").at(0).at("text").get<std::string>();
                    if (reply.contains("usageMetadata")) {
                        out.prompt_tokens = reply["usageMetadata"].value("promptTokenCount", 0);
                        out.completion_tokens =
                            reply["usageMetadata"].value("candidatesTokenCount", 0);
                    }
                    break;
                }
                case BackendKind::Ollama:
                    out.text = reply.at("response").get<std::string>();
                    out.prompt_tokens = reply.value("prompt_eval_count", 0);
                    out.completion_tokens = reply.value("eval_count", 0);
                    break;
                case BackendKind::Stub:
                    break;
            }
        } catch (const json::exception& e) {
            raise(ErrorCode::ProviderError,
                  std::string("unexpected reply shape: ") + e.what() + " in " +
                      body_excerpt(body));
        }
        return out;
    }

    BackendConfig config_;
    std::string base_url_;
};

}  // namespace

std::unique_ptr<Backend> make_http_backend(const BackendConfig& config) {
    return std::make_unique<HttpBackend>(config);
}

}  // namespace emot
