#include <doctest.h>

#include "emot/dormancy.hpp"
#include "emot/errors.hpp"

using namespace emot;

namespace {

DormancyRecord make_record(const std::string& content, Phase entry_phase, Phase next_phase,
                           int since) {
    DormancyRecord record;
    record.node_id = 7;
    record.entry_trust = compute_trust(0.3, 0.3, 0.3, 0.3);
    record.profile.term_weights = normalized_term_counts(content);
    record.profile.phase_affinity = {static_cast<int>(entry_phase),
                                     static_cast<int>(next_phase)};
    record.profile.dormant_since = since;
    return record;
}

}  // namespace

TEST_CASE("phase mapping over the iteration range") {
    CHECK(phase_for_iteration(1, 3) == Phase::HypothesisGeneration);
    CHECK(phase_for_iteration(2, 3) == Phase::HypothesisTesting);
    CHECK(phase_for_iteration(3, 3) == Phase::Synthesis);
    CHECK(phase_for_iteration(1, 1) == Phase::Synthesis);
    CHECK(phase_for_iteration(1, 2) == Phase::HypothesisGeneration);
    CHECK(phase_for_iteration(2, 2) == Phase::Synthesis);
    CHECK(phase_for_iteration(3, 5) == Phase::HypothesisTesting);

    try {
        phase_for_iteration(0, 3);
        FAIL("expected OutOfRange");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OutOfRange);
    }
    CHECK_THROWS_AS(phase_for_iteration(4, 3), Error);
}

TEST_CASE("enter_dormancy transitions a candidate and snapshots its profile") {
    Topology t = build_default_topology();
    t.node(4).trust = compute_trust(0.3, 0.3, 0.3, 0.3);

    const DormancyRecord record = enter_dormancy(
        t, 4, "borderline b12 level ambiguous zone", "problem context",
        1, Phase::HypothesisGeneration, Phase::HypothesisTesting, true);

    CHECK(t.node(4).state.kind == StateKind::Dormant);
    CHECK(record.profile.dormant_since == 1);
    CHECK(record.entry_trust.composite == doctest::Approx(0.3));
    CHECK_FALSE(record.profile.term_weights.empty());
    CHECK_FALSE(t.node(4).relevance_profile.empty());
    CHECK(record.profile.phase_affinity ==
          std::set<int>{static_cast<int>(Phase::HypothesisGeneration),
                        static_cast<int>(Phase::HypothesisTesting)});
}

TEST_CASE("enter_dormancy rejects non-candidates and disabled controllers") {
    Topology t = build_default_topology();
    t.node(4).trust = compute_trust(0.6, 0.6, 0.6, 0.6);

    try {
        enter_dormancy(t, 4, "text", "ctx", 1, Phase::HypothesisGeneration,
                       Phase::HypothesisTesting, true);
        FAIL("expected NotACandidate");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotACandidate);
    }

    t.node(4).trust = compute_trust(0.3, 0.3, 0.3, 0.3);
    try {
        enter_dormancy(t, 4, "text", "ctx", 1, Phase::HypothesisGeneration,
                       Phase::HypothesisTesting, false);
        FAIL("expected SdcDisabled");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SdcDisabled);
    }
    CHECK(t.node(4).state.kind == StateKind::Active);
}

TEST_CASE("reactivation probability: maximal terms reach 1.0") {
    const std::string content = "kelp iodine thyroid supplement";
    const auto record = make_record(content, Phase::HypothesisGeneration,
                                    Phase::HypothesisTesting, 3);
    const double p =
        reactivation_probability(record, content, Phase::HypothesisTesting, 3);
    CHECK(p == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reactivation probability: orthogonal stale mismatch decays to zero") {
    const auto record = make_record("kelp iodine thyroid", Phase::HypothesisGeneration,
                                    Phase::HypothesisTesting, 1);
    const double p = reactivation_probability(record, "unrelated words entirely",
                                              Phase::Synthesis, 1000000000);
    CHECK(p < 1e-6);
}

TEST_CASE("reactivation probability: hand-evaluated blend point") {
    // Profile over four distinct terms has weight 1/2 each; a context
    // carrying exactly one of them projects to cosine 0.5.
    const auto record = make_record("alpha beta gamma delta", Phase::HypothesisGeneration,
                                    Phase::HypothesisTesting, 1);
    const double p =
        reactivation_probability(record, "alpha", Phase::HypothesisTesting, 2);
    CHECK(p == doctest::Approx(0.65).epsilon(1e-9));  // 0.6*0.5 + 0.3 + 0.1/2
}

TEST_CASE("probability is monotone in cosine similarity") {
    const auto record = make_record("alpha beta gamma delta", Phase::HypothesisGeneration,
                                    Phase::HypothesisTesting, 1);
    double previous = -1.0;
    for (const auto& ctx : {"zulu", "alpha zulu zulu zulu", "alpha", "alpha beta",
                            "alpha beta gamma", "alpha beta gamma delta"}) {
        const double p = reactivation_probability(record, ctx, Phase::Synthesis, 2);
        CHECK(p >= previous);
        previous = p;
    }
}

TEST_CASE("pool evaluation bands") {
    const std::string content = "alpha beta gamma delta";
    SUBCASE("empty pool gives empty map") {
        CHECK(evaluate_dormant_pool({}, "ctx", Phase::Synthesis, 2).empty());
    }
    SUBCASE("p = 1.0 fully reactivates") {
        const auto record = make_record(content, Phase::Synthesis, Phase::Synthesis, 2);
        const auto decisions = evaluate_dormant_pool({record}, content, Phase::Synthesis, 2);
        REQUIRE(decisions.count(7) == 1);
        CHECK(decisions.at(7).kind == ReactivationKind::Reactivate);
        CHECK(decisions.at(7).probability == doctest::Approx(1.0));
    }
    SUBCASE("p = 0.65 partially activates with that weight") {
        const auto record = make_record(content, Phase::HypothesisGeneration,
                                        Phase::HypothesisTesting, 1);
        const auto decisions =
            evaluate_dormant_pool({record}, "alpha", Phase::HypothesisTesting, 2);
        CHECK(decisions.at(7).kind == ReactivationKind::Partial);
        CHECK(decisions.at(7).probability == doctest::Approx(0.65));
        // partial weights live inside the [0.3, 0.7) band
        CHECK(decisions.at(7).probability >= 0.3);
        CHECK(decisions.at(7).probability < 0.7);
    }
    SUBCASE("low probability stays dormant") {
        const auto record = make_record(content, Phase::HypothesisGeneration,
                                        Phase::HypothesisTesting, 1);
        const auto decisions =
            evaluate_dormant_pool({record}, "zulu", Phase::Synthesis, 5);
        CHECK(decisions.at(7).kind == ReactivationKind::Stay);
    }
}
