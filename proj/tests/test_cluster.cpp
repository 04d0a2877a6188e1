#include <doctest.h>

#include <random>

#include "emot/cluster.hpp"
#include "emot/errors.hpp"
#include "support/dbscan_oracle.hpp"
#include "support/helpers.hpp"

using namespace emot;

TEST_CASE("one point with min_pts 1 forms its own cluster") {
    const auto labeling = dbscan({{1.0, 0.0}}, 0.5, 1);
    CHECK(labeling.labels == std::vector<int>{0});
    CHECK(labeling.cluster_count() == 1);
}

TEST_CASE("identical points collapse into a single cluster for any feasible min_pts") {
    const std::vector<std::vector<double>> points(5, {0.3, 0.7});
    for (int min_pts = 1; min_pts <= 5; ++min_pts) {
        const auto labeling = dbscan(points, 0.2, min_pts);
        CHECK(labeling.cluster_count() == 1);
        for (int l : labeling.labels) CHECK(l == 0);
    }
}

TEST_CASE("two tight blobs beyond eps form two clusters with no noise") {
    // blob 1 hugs the x axis, blob 2 the y axis; cosine distance across blobs is ~1
    const std::vector<std::vector<double>> points = {
        {1.0, 0.01}, {1.0, 0.02}, {1.0, 0.03}, {0.01, 1.0}, {0.02, 1.0}, {0.03, 1.0},
    };
    const auto labeling = dbscan(points, 0.1, 2);
    CHECK(labeling.cluster_count() == 2);
    CHECK(labeling.labels == std::vector<int>{0, 0, 0, 1, 1, 1});
}

TEST_CASE("bad parameters") {
    try {
        dbscan({{1.0}}, 0.0, 1);
        FAIL("expected BadParams");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadParams);
    }
    CHECK_THROWS_AS(dbscan({{1.0}}, 0.5, 0), Error);
}

TEST_CASE("labels match the brute-force oracle over random small instances") {
    std::mt19937_64 rng(2024);
    const std::vector<double> eps_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    int instances = 0;
    while (instances < 120) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto points = emot::testing::random_sparse_points(rng, n);
        for (double eps : eps_grid) {
            for (int min_pts : {1, 2, 3}) {
                const auto actual = dbscan(points, eps, min_pts);
                const auto expected = emot::testing::dbscan_oracle(points, eps, min_pts);
                REQUIRE(actual.labels == expected.labels);
                REQUIRE(actual.cluster_count() == expected.cluster_count());
            }
        }
        ++instances;
    }
}

TEST_CASE("cluster count is invariant under input permutation") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 30; ++round) {
        auto points = emot::testing::random_sparse_points(rng, 8);
        const auto base = dbscan(points, 0.5, 2);
        std::shuffle(points.begin(), points.end(), rng);
        const auto shuffled = dbscan(points, 0.5, 2);
        CHECK(base.cluster_count() == shuffled.cluster_count());
    }
}
