#include <doctest.h>

#include <cmath>

#include "emot/errors.hpp"
#include "emot/palace.hpp"
#include "emot/text.hpp"

using namespace emot;

namespace {

EncodeInput input(int id, const std::string& text, double trust = 0.5) {
    return {id, text, trust};
}

}  // namespace

TEST_CASE("temporal ladder prefixes the iteration") {
    const MemoryEntry entry = encode({input(1, "metformin blocks b12 uptake")},
                                     EncodingStyle::TemporalLadder, 2);
    CHECK(entry.encoded_text.rfind("T2: ", 0) == 0);
    CHECK(entry.source_insights == std::vector<int>{1});
    CHECK_FALSE(entry.position.has_value());
}

TEST_CASE("visual hook leads with the salient terms") {
    const MemoryEntry entry =
        encode({input(1, "b12 b12 deficiency likely deficiency b12")},
               EncodingStyle::VisualHook, 1);
    // counts: b12 x3, deficiency x2, likely x1
    CHECK(entry.encoded_text.rfind("IMAGE: b12 deficiency likely | ", 0) == 0);
}

TEST_CASE("loci room position is the pinned hash split and is deterministic") {
    const std::string text = "supply chain disruption stopped the supplement";
    const MemoryEntry a = encode({input(1, text)}, EncodingStyle::LociRoom, 1);
    const MemoryEntry b = encode({input(2, text)}, EncodingStyle::LociRoom, 3);
    REQUIRE(a.position.has_value());
    CHECK(a.position == b.position);
    const uint64_t h = fnv1a64(text);
    CHECK(a.position->first == static_cast<int>(h % 4));
    CHECK(a.position->second == static_cast<int>((h / 4) % 4));
    CHECK(a.encoded_text == "ROOM(" + std::to_string(a.position->first) + "," +
                                std::to_string(a.position->second) + "): " + text);
}

TEST_CASE("narrative hook splits at the first clause boundary") {
    const MemoryEntry entry = encode(
        {input(1, "the supplement stopped, symptoms emerged months later")},
        EncodingStyle::NarrativeHook, 1);
    CHECK(entry.encoded_text ==
          "BECAUSE the supplement stopped, THEN symptoms emerged months later");
}

TEST_CASE("chunking demands two insights sharing a term") {
    SUBCASE("single insight is too small") {
        try {
            encode({input(1, "alpha beta")}, EncodingStyle::Chunking, 1);
            FAIL("expected ChunkTooSmall");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ChunkTooSmall);
        }
    }
    SUBCASE("no shared non-stopword term") {
        try {
            encode({input(1, "alpha beta"), input(2, "gamma delta")},
                   EncodingStyle::Chunking, 1);
            FAIL("expected NoSharedTerms");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NoSharedTerms);
        }
    }
    SUBCASE("shared terms listed and texts joined") {
        const MemoryEntry entry =
            encode({input(1, "b12 level low"), input(2, "b12 supplement stopped")},
                   EncodingStyle::Chunking, 1);
        CHECK(entry.encoded_text == "CHUNK[b12]: b12 level low | b12 supplement stopped");
        CHECK(entry.source_insights == std::vector<int>{1, 2});
    }
    SUBCASE("non-chunking styles require exactly one insight") {
        CHECK_THROWS_AS(encode({input(1, "a b"), input(2, "c d")},
                               EncodingStyle::VisualHook, 1),
                        Error);
    }
}

TEST_CASE("encode is deterministic modulo id") {
    const MemoryEntry a = encode({input(1, "same text here")}, EncodingStyle::VisualHook, 2);
    const MemoryEntry b = encode({input(1, "same text here")}, EncodingStyle::VisualHook, 2);
    CHECK(a.encoded_text == b.encoded_text);
    CHECK(a.retrieval_vector == b.retrieval_vector);
    CHECK(a.timestamp == b.timestamp);
}

TEST_CASE("store appends; capacity evicts the lowest source trust, oldest on ties") {
    SUBCASE("store into empty palace") {
        Palace palace;
        palace.store(encode({input(1, "alpha")}, EncodingStyle::TemporalLadder, 1));
        CHECK(palace.size() == 1);
    }
    SUBCASE("capacity two, trusts 0.9/0.2/0.8 evicts the 0.2 entry") {
        Palace palace(PalaceConfig{.capacity = 2});
        palace.store(encode({input(1, "alpha", 0.9)}, EncodingStyle::TemporalLadder, 1));
        palace.store(encode({input(2, "beta", 0.2)}, EncodingStyle::TemporalLadder, 2));
        palace.store(encode({input(3, "gamma", 0.8)}, EncodingStyle::TemporalLadder, 3));
        REQUIRE(palace.size() == 2);
        CHECK(palace.entries()[0].source_trust == doctest::Approx(0.9));
        CHECK(palace.entries()[1].source_trust == doctest::Approx(0.8));
    }
    SUBCASE("trust tie evicts the oldest") {
        Palace palace(PalaceConfig{.capacity = 2});
        palace.store(encode({input(1, "alpha", 0.5)}, EncodingStyle::TemporalLadder, 1));
        palace.store(encode({input(2, "beta", 0.5)}, EncodingStyle::TemporalLadder, 2));
        palace.store(encode({input(3, "gamma", 0.9)}, EncodingStyle::TemporalLadder, 3));
        REQUIRE(palace.size() == 2);
        CHECK(palace.entries()[0].source_insights == std::vector<int>{2});
    }
    SUBCASE("uncapped palace never evicts") {
        Palace palace;
        for (int i = 0; i < 50; ++i) {
            palace.store(encode({input(i, "text " + std::to_string(i), 0.01)},
                                EncodingStyle::TemporalLadder, i));
        }
        CHECK(palace.size() == 50);
    }
}

TEST_CASE("retrieval ranks by cosine plus the phase-style bonus") {
    Palace palace;
    palace.store(encode({input(1, "metformin reduces b12 absorption")},
                        EncodingStyle::TemporalLadder, 1));
    palace.store(encode({input(2, "kelp supplements add iodine load")},
                        EncodingStyle::TemporalLadder, 1));
    palace.store(encode({input(3, "b12 deficiency causes neuropathy")},
                        EncodingStyle::NarrativeHook, 2));

    SUBCASE("k = 0 returns nothing") {
        CHECK(palace.retrieve("b12", 0, Phase::HypothesisTesting).empty());
    }
    SUBCASE("query equal to a stored text ranks that entry first") {
        const auto hits = palace.retrieve(palace.entries()[0].encoded_text, 3,
                                          Phase::HypothesisGeneration);
        REQUIRE_FALSE(hits.empty());
        CHECK(hits[0].first.id == 0);
        CHECK(hits[0].second == doctest::Approx(1.0));
    }
    SUBCASE("ranking matches an exhaustive cosine computation") {
        const std::string query = "b12 deficiency from metformin";
        const auto hits = palace.retrieve(query, 3, Phase::HypothesisGeneration);
        REQUIRE(hits.size() == 3);

        // brute force: project the query onto the union vocabulary, dot with each entry
        SparseVec space;
        for (const auto& e : palace.entries()) {
            for (const auto& [term, w] : e.retrieval_vector) space[term] = 1.0;
        }
        const SparseVec q = normalized_term_counts_in_space(query, space);
        struct Scored {
            double score;
            int timestamp;
            int id;
        };
        std::vector<Scored> expected;
        for (const auto& e : palace.entries()) {
            expected.push_back({sparse_cosine(q, e.retrieval_vector), e.timestamp, e.id});
        }
        std::stable_sort(expected.begin(), expected.end(), [](const Scored& a, const Scored& b) {
            if (a.score != b.score) return a.score > b.score;
            if (a.timestamp != b.timestamp) return a.timestamp > b.timestamp;
            return a.id < b.id;
        });
        for (size_t i = 0; i < hits.size(); ++i) {
            CHECK(hits[i].first.id == expected[i].id);
            CHECK(hits[i].second == doctest::Approx(expected[i].score));
        }
    }
    SUBCASE("phase-preferred style gets the bonus") {
        const std::string query = palace.entries()[2].encoded_text;
        const auto hits = palace.retrieve(query, 1, Phase::Synthesis);  // prefers NarrativeHook
        REQUIRE(hits.size() == 1);
        CHECK(hits[0].first.style == EncodingStyle::NarrativeHook);
        CHECK(hits[0].second == doctest::Approx(1.1));  // self-cosine 1 plus bonus
    }
    SUBCASE("style filter narrows candidates") {
        const auto hits =
            palace.retrieve("b12", 3, Phase::HypothesisTesting, EncodingStyle::NarrativeHook);
        REQUIRE(hits.size() == 1);
        CHECK(hits[0].first.id == 2);
    }
    SUBCASE("scores stay within [0, 1.1]") {
        for (Phase phase : {Phase::HypothesisGeneration, Phase::HypothesisTesting,
                            Phase::Synthesis}) {
            for (const auto& [entry, score] : palace.retrieve("iodine b12", 3, phase)) {
                CHECK(score >= 0.0);
                CHECK(score <= 1.1 + 1e-12);
            }
        }
    }
}

TEST_CASE("retrieval ties break toward newer timestamp then lower id") {
    Palace palace;
    palace.store(encode({input(1, "identical words")}, EncodingStyle::TemporalLadder, 1));
    palace.store(encode({input(2, "identical words")}, EncodingStyle::TemporalLadder, 1));
    // same encoded text except the T prefix differs; use same iteration for a true tie
    const auto hits = palace.retrieve("identical words", 2, Phase::HypothesisGeneration);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0].second == doctest::Approx(hits[1].second));
    CHECK(hits[0].first.id < hits[1].first.id);
}

TEST_CASE("serialization round-trips through the trace format") {
    Palace palace;
    palace.store(encode({input(1, "metformin reduces b12 absorption", 0.7)},
                        EncodingStyle::LociRoom, 2));
    palace.store(
        encode({input(2, "kelp adds iodine", 0.4), input(3, "kelp was undisclosed", 0.6)},
               EncodingStyle::Chunking, 3));
    const auto lines = palace.serialize();
    REQUIRE(lines.size() == 2);

    const Palace loaded = Palace::deserialize(lines);
    REQUIRE(loaded.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(loaded.entries()[i].encoded_text == palace.entries()[i].encoded_text);
        CHECK(loaded.entries()[i].style == palace.entries()[i].style);
        CHECK(loaded.entries()[i].timestamp == palace.entries()[i].timestamp);
        CHECK(loaded.entries()[i].source_insights == palace.entries()[i].source_insights);
        CHECK(loaded.entries()[i].position == palace.entries()[i].position);
        CHECK(loaded.entries()[i].retrieval_vector == palace.entries()[i].retrieval_vector);
    }
}
