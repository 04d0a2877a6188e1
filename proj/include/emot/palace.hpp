#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "emot/dormancy.hpp"
#include "emot/text.hpp"

namespace emot {

enum class EncodingStyle { VisualHook, LociRoom, Chunking, TemporalLadder, NarrativeHook };

const char* encoding_style_name(EncodingStyle style);
std::optional<EncodingStyle> encoding_style_from_name(const std::string& name);

// Retrieval-time style preference per phase: hypothesis generation
// favours imagery, testing favours chronology, synthesis favours
// narrative causality.
EncodingStyle preferred_style_for_phase(Phase phase);

struct EncodeInput {
    int insight_id = -1;
    std::string text;
    double trust = 0.0;
};

struct MemoryEntry {
    int id = -1;
    EncodingStyle style = EncodingStyle::VisualHook;
    std::string encoded_text;
    std::vector<int> source_insights;
    std::optional<std::pair<int, int>> position;  // LociRoom only
    int timestamp = 0;                            // iteration ordinal
    double source_trust = 0.0;                    // max over sources; drives eviction
    SparseVec retrieval_vector;                   // unit-norm tf-idf of encoded_text
};

struct PalaceConfig {
    std::optional<size_t> capacity;  // unbounded by default
    int loci_grid = 4;
    double style_bonus = 0.1;
};

// Deterministic template transform of one insight (or, for Chunking, a
// group sharing at least one non-stopword term).
// Throws ChunkTooSmall / NoSharedTerms per the preconditions.
MemoryEntry encode(const std::vector<EncodeInput>& inputs, EncodingStyle style, int iteration,
                   int loci_grid = 4);

class Palace {
public:
    explicit Palace(PalaceConfig config = {}) : config_(std::move(config)) {}

    // Appends, assigning the next entry id; over capacity, evicts the
    // lowest-source-trust entry (ties: oldest).
    int store(MemoryEntry entry);

    // Top-k by cosine against the query projected into the palace term
    // space, plus the style bonus when the entry's style matches the
    // phase preference. Ties: newer timestamp, then lower id.
    std::vector<std::pair<MemoryEntry, double>> retrieve(
        const std::string& query_text, size_t k, Phase phase,
        std::optional<EncodingStyle> style_filter = std::nullopt) const;

    const std::vector<MemoryEntry>& entries() const { return entries_; }
    const PalaceConfig& config() const { return config_; }
    size_t size() const { return entries_.size(); }

    // Line-oriented serialization, shared by the run trace's palace
    // section and the standalone export/import files.
    std::vector<std::string> serialize() const;
    static Palace deserialize(const std::vector<std::string>& lines, PalaceConfig config = {});

private:
    PalaceConfig config_;
    std::vector<MemoryEntry> entries_;
    int next_id_ = 0;
};

}  // namespace emot
