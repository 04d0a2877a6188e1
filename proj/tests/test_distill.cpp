#include <doctest.h>

#include <random>
#include <set>

#include "emot/distill.hpp"
#include "support/helpers.hpp"

using namespace emot;
using emot::testing::make_insight;

TEST_CASE("negation markers are matched on token boundaries") {
    CHECK(contains_negation("this is not right"));
    CHECK(contains_negation("No further action"));
    CHECK(contains_negation("we can never exclude it"));
    CHECK(contains_negation("cannot be confirmed"));
    CHECK(contains_negation("sepsis was ruled out early"));
    CHECK_FALSE(contains_negation("normal knot notation"));  // substrings do not count
    CHECK_FALSE(contains_negation("the ruler was outside"));
}

TEST_CASE("contradicting pair drops the lower-trust side") {
    std::vector<Insight> insights = {
        make_insight(0, "b12 deficiency likely", 0.7),
        make_insight(1, "b12 deficiency not likely", 0.4),
    };
    const auto kept = resolve_contradictions(std::span<Insight>(insights));
    CHECK(kept == std::vector<size_t>{0});
    CHECK(insights[1].contradicted);
    CHECK_FALSE(insights[0].contradicted);
}

TEST_CASE("negation parity means no contradiction") {
    std::vector<Insight> insights = {
        make_insight(0, "b12 deficiency not likely", 0.7),
        make_insight(1, "pernicious anaemia not likely", 0.4),
    };
    // both carry "not": parity, so both survive even if similar
    const auto kept = resolve_contradictions(std::span<Insight>(insights));
    CHECK(kept.size() == 2);
}

TEST_CASE("dissimilar pairs never contradict") {
    std::vector<Insight> insights = {
        make_insight(0, "b12 deficiency likely", 0.7),
        make_insight(1, "climate treaty is not enforceable", 0.4),
    };
    const auto kept = resolve_contradictions(std::span<Insight>(insights));
    CHECK(kept.size() == 2);
    CHECK_FALSE(insights[1].contradicted);
}

TEST_CASE("distill on an empty list is empty") {
    std::vector<Insight> none;
    CHECK(distill(std::span<Insight>(none), "context").empty());
}

TEST_CASE("near-duplicates collapse to the higher-trust representative") {
    std::vector<Insight> insights = {
        make_insight(0, "metformin blocks b12 absorption pathway", 0.8),
        make_insight(1, "metformin blocks b12 absorption pathway", 0.6),
    };
    const auto reps = distill(std::span<Insight>(insights), "b12 absorption");
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].insight_id == 0);
    CHECK(reps[0].source_ids == std::vector<int>{0, 1});
    CHECK(insights[0].utilisation_count == 1);
    CHECK(insights[1].utilisation_count == 1);
    CHECK(reps[0].relevance > 0.0);
}

TEST_CASE("representative ties resolve to the lowest id") {
    std::vector<Insight> insights = {
        make_insight(5, "identical insight text here", 0.6),
        make_insight(3, "identical insight text here", 0.6),
    };
    const auto reps = distill(std::span<Insight>(insights), "context");
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].insight_id == 3);
}

TEST_CASE("orthogonal insights survive as noise singletons") {
    std::vector<Insight> insights = {
        make_insight(0, "kelp iodine thyroid", 0.5),
        make_insight(1, "climate migration treaty", 0.6),
    };
    const auto reps = distill(std::span<Insight>(insights), "anything");
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].source_ids.size() == 1);
    CHECK(reps[1].source_ids.size() == 1);
}

TEST_CASE("contradicted cluster members are dropped from sources") {
    std::vector<Insight> insights = {
        make_insight(0, "b12 deficiency likely cause", 0.9),
        make_insight(1, "b12 deficiency likely cause", 0.8),
        make_insight(2, "b12 deficiency not likely cause", 0.2),
    };
    const auto reps = distill(std::span<Insight>(insights), "b12");
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].insight_id == 0);
    CHECK(reps[0].source_ids == std::vector<int>{0, 1});
    CHECK(insights[2].contradicted);
    CHECK(insights[2].utilisation_count == 0);
}

TEST_CASE("distill never adds insights and partitions the non-dropped inputs") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 40; ++round) {
        std::vector<Insight> insights;
        const int n = 1 + static_cast<int>(rng() % 10);
        for (int i = 0; i < n; ++i) {
            insights.push_back(make_insight(
                i, emot::testing::random_text(rng, 2 + static_cast<int>(rng() % 5)),
                0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0));
        }
        const auto reps = distill(std::span<Insight>(insights), "context");
        CHECK(reps.size() <= insights.size());

        std::set<int> seen;
        size_t covered = 0;
        for (const auto& rep : reps) {
            for (int id : rep.source_ids) {
                CHECK(seen.insert(id).second);  // no id in two source sets
                ++covered;
            }
        }
        size_t dropped = 0;
        for (const auto& insight : insights) dropped += insight.contradicted ? 1 : 0;
        CHECK(covered == insights.size() - dropped);
    }
}

TEST_CASE("partial weight scales the representative choice") {
    // same composite, but the second insight is weight-scaled down
    std::vector<Insight> insights = {
        make_insight(0, "shared cluster insight text", 0.6, 0, 1.0),
        make_insight(1, "shared cluster insight text", 0.9, 1, 0.4),
    };
    // effective: 0.6 vs 0.36
    const auto reps = distill(std::span<Insight>(insights), "context");
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].insight_id == 0);
    CHECK(reps[0].effective_trust == doctest::Approx(0.6));
}
