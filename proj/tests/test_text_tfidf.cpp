#include <doctest.h>

#include <cmath>
#include <random>

#include "emot/errors.hpp"
#include "emot/text.hpp"
#include "emot/tfidf.hpp"
#include "support/helpers.hpp"

using namespace emot;

TEST_CASE("tokenizer lowercases, splits on non-alphanumerics, drops short and stop words") {
    const auto toks = tokenize("The B12-deficiency is NOT ruled-out; a 7x risk!");
    // "the", "is", "not", "a" are stopwords; "7x" survives, single chars do not
    CHECK(toks == std::vector<std::string>{"b12", "deficiency", "ruled", "out", "7x", "risk"});
}

TEST_CASE("identical documents give identical unit-norm vectors") {
    const auto [model, vectors] = tfidf_fit_transform({"apple banana", "apple banana"});
    REQUIRE(vectors.size() == 2);
    CHECK(vectors[0] == vectors[1]);
    double norm = 0.0;
    for (double x : vectors[0]) norm += x * x;
    CHECK(std::abs(std::sqrt(norm) - 1.0) < 1e-12);
}

TEST_CASE("single-document idf is exactly 1") {
    const auto [model, vectors] = tfidf_fit_transform({"fox fox hen"});
    for (size_t i = 0; i < model.vocabulary.size(); ++i) {
        CHECK(model.idf(i) == doctest::Approx(1.0).epsilon(1e-15));
    }
    // vector is then just the normalized count vector: counts (2,1)/sqrt(5)
    REQUIRE(model.vocabulary == std::vector<std::string>{"fox", "hen"});
    CHECK(vectors[0][0] == doctest::Approx(2.0 / std::sqrt(5.0)));
    CHECK(vectors[0][1] == doctest::Approx(1.0 / std::sqrt(5.0)));
}

TEST_CASE("two-document worked example: (0.580, 0.815) on (red, fox)") {
    const auto [model, vectors] = tfidf_fit_transform({"red fox", "red hen"});
    REQUIRE(model.vocabulary == std::vector<std::string>{"fox", "hen", "red"});
    // idf(red) = ln(3/3)+1 = 1, idf(fox) = ln(3/2)+1
    CHECK(model.idf(2) == doctest::Approx(1.0));
    CHECK(model.idf(0) == doctest::Approx(std::log(1.5) + 1.0));
    const double red = vectors[0][2];
    const double fox = vectors[0][0];
    CHECK(std::abs(red - 0.580) < 1e-3);
    CHECK(std::abs(fox - 0.815) < 1e-3);
}

TEST_CASE("vocabulary order is lexicographic regardless of corpus order") {
    const auto [m1, v1] = tfidf_fit_transform({"zebra apple", "mango"});
    CHECK(m1.vocabulary == std::vector<std::string>{"apple", "mango", "zebra"});
}

TEST_CASE("empty corpus raises EmptyCorpus") {
    try {
        tfidf_fit_transform({});
        FAIL("expected EmptyCorpus");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyCorpus);
    }
}

TEST_CASE("every vector has norm 1 or 0; 0 only without in-vocabulary terms") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        std::vector<std::string> corpus;
        const int docs = 1 + static_cast<int>(rng() % 6);
        for (int d = 0; d < docs; ++d) {
            corpus.push_back(emot::testing::random_text(rng, 1 + static_cast<int>(rng() % 8)));
        }
        const auto [model, vectors] = tfidf_fit_transform(corpus);
        for (size_t d = 0; d < vectors.size(); ++d) {
            double norm = 0.0;
            for (double x : vectors[d]) norm += x * x;
            norm = std::sqrt(norm);
            if (tokenize(corpus[d]).empty()) {
                CHECK(norm == 0.0);
            } else {
                CHECK(std::abs(norm - 1.0) < 1e-9);
            }
        }
        // transform of out-of-vocabulary text yields the zero vector
        const auto projected = model.transform("qqqqq zzzzz");
        double norm = 0.0;
        for (double x : projected) norm += x * x;
        CHECK(norm == 0.0);
    }
}

TEST_CASE("cosine distance basics") {
    CHECK(cosine_distance({1.0, 2.0}, {1.0, 2.0}) == doctest::Approx(0.0));
    CHECK(cosine_distance({1.0, 0.0}, {0.0, 3.0}) == doctest::Approx(1.0));
    CHECK(std::abs(cosine_distance({1.0, 0.0}, {1.0, 1.0}) -
                   (1.0 - 1.0 / std::sqrt(2.0))) < 1e-9);
    SUBCASE("zero vector is at distance 1 from anything") {
        CHECK(cosine_distance({0.0, 0.0}, {1.0, 1.0}) == doctest::Approx(1.0));
        CHECK(cosine_distance({0.0, 0.0}, {0.0, 0.0}) == doctest::Approx(1.0));
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(cosine_distance({1.0}, {1.0, 2.0}), Error);
    }
    SUBCASE("opposed vectors reach distance 2") {
        CHECK(cosine_distance({1.0, 0.0}, {-1.0, 0.0}) == doctest::Approx(2.0));
    }
}

TEST_CASE("sparse helpers mirror the dense conventions") {
    const SparseVec a = normalized_term_counts("alpha beta alpha");
    CHECK(a.at("alpha") == doctest::Approx(2.0 / std::sqrt(5.0)));
    CHECK(sparse_cosine(a, a) == doctest::Approx(1.0));
    CHECK(sparse_cosine(a, SparseVec{}) == 0.0);

    const SparseVec restricted = normalized_term_counts_in_space("alpha zulu", a);
    CHECK(restricted.size() == 1);
    CHECK(restricted.at("alpha") == doctest::Approx(1.0));
}

TEST_CASE("fnv1a64 separates nearby inputs") {
    CHECK(fnv1a64("a") != fnv1a64("b"));
    CHECK(fnv1a64("ab") != fnv1a64("ba"));
    CHECK(fnv1a64("") == 1469598103934665603ull);  // offset basis, pins the variant
}
