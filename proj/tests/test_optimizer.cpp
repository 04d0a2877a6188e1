#include <doctest.h>

#include "emot/backend.hpp"
#include "emot/errors.hpp"
#include "emot/optimizer.hpp"

using namespace emot;

namespace {

BackendConfig stub_config(uint64_t seed = 1) {
    BackendConfig config;
    config.seed = seed;
    return config;
}

}  // namespace

TEST_CASE("cache key separates every component") {
    BackendConfig config = stub_config();
    const CompletionRequest request{"hello world", 1024, 0.0};
    const std::string base = cache_key(config, request);

    CHECK(cache_key(config, request) == base);

    BackendConfig other_model = config;
    other_model.model = "stub-xl";
    CHECK(cache_key(other_model, request) != base);

    BackendConfig other_kind = config;
    other_kind.kind = BackendKind::Ollama;
    CHECK(cache_key(other_kind, request) != base);

    CompletionRequest other_prompt = request;
    other_prompt.prompt = "hello worlds";
    CHECK(cache_key(config, other_prompt) != base);

    CompletionRequest other_temp = request;
    other_temp.temperature = 0.7;
    CHECK(cache_key(config, other_temp) != base);

    CompletionRequest other_max = request;
    other_max.max_output = 2048;
    CHECK(cache_key(config, other_max) != base);

    // field boundaries are length-prefixed, so shifted content differs
    BackendConfig tricky_a = config;
    tricky_a.model = "ab";
    CompletionRequest tricky_req_a{"c", 1, 0.0};
    BackendConfig tricky_b = config;
    tricky_b.model = "a";
    CompletionRequest tricky_req_b{"bc", 1, 0.0};
    CHECK(cache_key(tricky_a, tricky_req_a) != cache_key(tricky_b, tricky_req_b));
}

TEST_CASE("cached_complete books hits and misses correctly") {
    StubBackend backend(stub_config());
    CompletionCache cache;
    SharedLedger ledger;

    const CompletionRequest request{"ROLE: probe\nsay something"};
    const auto first = cached_complete(cache, ledger, backend, request);
    CHECK_FALSE(first.was_hit);
    const auto second = cached_complete(cache, ledger, backend, request);
    CHECK(second.was_hit);
    CHECK(second.response.text == first.response.text);

    const UsageLedger totals = ledger.snapshot();
    CHECK(totals.llm_calls == 1);
    CHECK(totals.cache_hits == 1);
    CHECK(totals.requests() == 2);
    CHECK(totals.prompt_tokens == 0);  // stub reports zero tokens
    CHECK(totals.completion_tokens == 0);
    CHECK(totals.wall_seconds == 0.0);
}

TEST_CASE("requests differing only in model are two misses") {
    CompletionCache cache;
    SharedLedger ledger;
    StubBackend a(stub_config());
    BackendConfig b_config = stub_config();
    b_config.model = "stub-xl";
    StubBackend b(b_config);

    const CompletionRequest request{"same prompt"};
    CHECK_FALSE(cached_complete(cache, ledger, a, request).was_hit);
    CHECK_FALSE(cached_complete(cache, ledger, b, request).was_hit);
    CHECK(ledger.snapshot().llm_calls == 2);
}

TEST_CASE("backend errors propagate and are not cached") {
    struct FailingBackend : Backend {
        BackendConfig cfg;
        int calls = 0;
        CompletionResponse complete(const CompletionRequest&) override {
            ++calls;
            raise(ErrorCode::ProviderError, "boom");
        }
        const BackendConfig& config() const override { return cfg; }
    } backend;

    CompletionCache cache;
    SharedLedger ledger;
    const CompletionRequest request{"prompt"};
    CHECK_THROWS_AS(cached_complete(cache, ledger, backend, request), Error);
    CHECK_THROWS_AS(cached_complete(cache, ledger, backend, request), Error);
    CHECK(backend.calls == 2);  // second attempt was not served from cache
    CHECK(cache.size() == 0);
    CHECK(ledger.snapshot().requests() == 0);
}

TEST_CASE("cost estimation") {
    UsageLedger ledger;
    const CostModel rates{0.003, 0.015};
    CHECK(estimate_cost(ledger, rates) == 0.0);

    ledger.prompt_tokens = 1000;
    ledger.completion_tokens = 1000;
    CHECK(estimate_cost(ledger, rates) == doctest::Approx(0.018));

    ledger.prompt_tokens *= 2;
    ledger.completion_tokens *= 2;
    CHECK(estimate_cost(ledger, rates) == doctest::Approx(0.036));
}

TEST_CASE("pruning only acts when the dormancy controller is off") {
    Topology t = build_default_topology();
    t.node(2).trust = compute_trust(0.3, 0.3, 0.3, 0.3);
    t.node(7).trust = compute_trust(0.6, 0.6, 0.6, 0.6);

    SUBCASE("dormancy on prunes nothing") {
        CHECK(prune_low_value(t, 0.5, true).empty());
        CHECK(t.node(2).state.kind == StateKind::Active);
    }
    SUBCASE("dormancy off prunes the sub-threshold node") {
        const auto pruned = prune_low_value(t, 0.5, false);
        CHECK(pruned == std::vector<int>{2});
        CHECK(t.node(2).state.kind == StateKind::Pruned);
        CHECK(t.node(7).state.kind == StateKind::Active);
    }
    SUBCASE("nothing below threshold prunes nothing") {
        t.node(2).trust = compute_trust(0.9, 0.9, 0.9, 0.9);
        CHECK(prune_low_value(t, 0.5, false).empty());
    }
    SUBCASE("nodes without trust are left alone") {
        Topology fresh = build_default_topology();
        CHECK(prune_low_value(fresh, 0.5, false).empty());
    }
    SUBCASE("a sub-threshold Meta node is pruned too") {
        t.node(12).trust = compute_trust(0.1, 0.1, 0.1, 0.1);
        const auto pruned = prune_low_value(t, 0.5, false);
        CHECK(pruned == std::vector<int>{2, 12});
    }
}
