#include "emot/optimizer.hpp"

#include <chrono>

#include "emot/text.hpp"

namespace emot {

double estimate_cost(const UsageLedger& ledger, const CostModel& model) {
    return model.input_rate * static_cast<double>(ledger.prompt_tokens) / 1000.0 +
           model.output_rate * static_cast<double>(ledger.completion_tokens) / 1000.0;
}

std::string cache_key(const BackendConfig& config, const CompletionRequest& request) {
    auto field = [](const std::string& value) {
        return std::to_string(value.size()) + ":" + value;
    };
    std::string key;
    key += field(backend_kind_name(config.kind));
    key += field(config.model);
    key += field(request.prompt);
    key += field(std::to_string(request.max_output));
    key += field(format_double(request.temperature, 6));
    return key;
}

void SharedLedger::record_call(int prompt_tokens, int completion_tokens, double wall_seconds) {
    std::lock_guard<std::mutex> lock(mutex_);
    totals_.llm_calls += 1;
    totals_.prompt_tokens += prompt_tokens;
    totals_.completion_tokens += completion_tokens;
    totals_.wall_seconds += wall_seconds;
}

void SharedLedger::record_hit() {
    std::lock_guard<std::mutex> lock(mutex_);
    totals_.cache_hits += 1;
}

UsageLedger SharedLedger::snapshot() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return totals_;
}

std::optional<CompletionResponse> CompletionCache::lookup(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CompletionCache::insert(const std::string& key, CompletionResponse response) {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_[key] = std::move(response);  // last writer wins on identical keys
}

size_t CompletionCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
}

CachedResult cached_complete(CompletionCache& cache, SharedLedger& ledger, Backend& backend,
                             const CompletionRequest& request) {
    const std::string key = cache_key(backend.config(), request);
    if (auto hit = cache.lookup(key)) {
        ledger.record_hit();
        return {*hit, true};
    }
    double wall = 0.0;
    CompletionResponse response;
    if (backend.config().kind == BackendKind::Stub) {
        response = backend.complete(request);
    } else {
        const auto begin = std::chrono::steady_clock::now();
        response = backend.complete(request);
        wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
    }
    cache.insert(key, response);
    ledger.record_call(response.prompt_tokens, response.completion_tokens, wall);
    return {std::move(response), false};
}

std::vector<int> prune_low_value(Topology& topology, double threshold, bool sdc_enabled) {
    std::vector<int> pruned;
    if (sdc_enabled) return pruned;  // dormancy owns sub-threshold nodes
    for (auto& node : topology.nodes()) {
        if (!node.state.processing()) continue;
        if (!node.trust) continue;
        if (node.trust->composite < threshold) {
            topology.set_state(node.id, NodeState::pruned());
            pruned.push_back(node.id);
        }
    }
    return pruned;
}

}  // namespace emot
