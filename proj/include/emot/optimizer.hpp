#pragma once

#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "emot/backend.hpp"
#include "emot/hierarchy.hpp"

namespace emot {

// Per-run usage counters. llm_calls counts only non-cached backend
// invocations; wall_seconds accumulates only around HTTP providers so
// stub traces stay byte-deterministic. estimated_cost is derived from
// the token counters against a CostModel whenever the ledger is
// snapshotted or reported.
struct UsageLedger {
    long long llm_calls = 0;
    long long cache_hits = 0;
    long long prompt_tokens = 0;
    long long completion_tokens = 0;
    double wall_seconds = 0.0;
    double estimated_cost = 0.0;

    long long requests() const { return llm_calls + cache_hits; }
};

// Currency per 1,000 tokens. Defaults track the Sonnet-class pricing
// used for the documented examples; both rates are configuration.
struct CostModel {
    double input_rate = 0.003;
    double output_rate = 0.015;
};

double estimate_cost(const UsageLedger& ledger, const CostModel& model);

// Unambiguous digest of (backend kind, model, prompt, sampling
// parameters): length-prefixed concatenation, so any differing
// component changes the key.
std::string cache_key(const BackendConfig& config, const CompletionRequest& request);

// Thread-safe ledger wrapper; the engine shares one per run.
class SharedLedger {
public:
    void record_call(int prompt_tokens, int completion_tokens, double wall_seconds);
    void record_hit();
    UsageLedger snapshot() const;

private:
    UsageLedger totals_;
    mutable std::mutex mutex_;
};

class CompletionCache {
public:
    std::optional<CompletionResponse> lookup(const std::string& key) const;
    void insert(const std::string& key, CompletionResponse response);
    size_t size() const;

private:
    std::unordered_map<std::string, CompletionResponse> entries_;
    mutable std::mutex mutex_;
};

struct CachedResult {
    CompletionResponse response;
    bool was_hit = false;
};

// Serves the request from the cache when possible; otherwise calls the
// backend, stores the response, and books the call. Backend errors
// propagate and are never cached.
CachedResult cached_complete(CompletionCache& cache, SharedLedger& ledger, Backend& backend,
                             const CompletionRequest& request);

// With the dormancy controller enabled this prunes nothing (dormancy
// owns sub-threshold nodes); disabled, every node whose trust composite
// is below the threshold becomes Pruned. Returns pruned ids ascending.
std::vector<int> prune_low_value(Topology& topology, double threshold, bool sdc_enabled);

}  // namespace emot
