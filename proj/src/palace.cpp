#include "emot/palace.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "emot/errors.hpp"

namespace emot {

namespace {

// Top-3 tokens by (count desc, term asc): the hooks a visual encoding
// hangs the image on.
std::string salient_terms(const std::string& text) {
    std::map<std::string, int> counts;
    for (const auto& tok : tokenize(text)) counts[tok] += 1;
    std::vector<std::pair<std::string, int>> ranked(counts.begin(), counts.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::string out;
    for (size_t i = 0; i < ranked.size() && i < 3; ++i) {
        if (!out.empty()) out += ' ';
        out += ranked[i].first;
    }
    return out;
}

std::vector<std::string> shared_terms(const std::vector<EncodeInput>& inputs) {
    std::set<std::string> shared;
    for (size_t i = 0; i < inputs.size(); ++i) {
        const auto toks = tokenize(inputs[i].text);
        std::set<std::string> current(toks.begin(), toks.end());
        if (i == 0) {
            shared = std::move(current);
        } else {
            std::set<std::string> kept;
            std::set_intersection(shared.begin(), shared.end(), current.begin(), current.end(),
                                  std::inserter(kept, kept.begin()));
            shared = std::move(kept);
        }
    }
    return {shared.begin(), shared.end()};
}

std::string escape_text(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
        } else if (c == '\\') {
            out += "\\\\";
        } else {
            out += c;
        }
    }
    return out;
}

std::string unescape_text(const std::string& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '\\' && i + 1 < s.size()) {
            ++i;
            out += (s[i] == 'n') ? '\n' : s[i];
        } else {
            out += s[i];
        }
    }
    return out;
}

}  // namespace

const char* encoding_style_name(EncodingStyle style) {
    switch (style) {
        case EncodingStyle::VisualHook: return "VisualHook";
        case EncodingStyle::LociRoom: return "LociRoom";
        case EncodingStyle::Chunking: return "Chunking";
        case EncodingStyle::TemporalLadder: return "TemporalLadder";
        case EncodingStyle::NarrativeHook: return "NarrativeHook";
    }
    return "?";
}

std::optional<EncodingStyle> encoding_style_from_name(const std::string& name) {
    for (EncodingStyle s : {EncodingStyle::VisualHook, EncodingStyle::LociRoom,
                            EncodingStyle::Chunking, EncodingStyle::TemporalLadder,
                            EncodingStyle::NarrativeHook}) {
        if (name == encoding_style_name(s)) return s;
    }
    return std::nullopt;
}

EncodingStyle preferred_style_for_phase(Phase phase) {
    switch (phase) {
        case Phase::HypothesisGeneration: return EncodingStyle::VisualHook;
        case Phase::HypothesisTesting: return EncodingStyle::TemporalLadder;
        case Phase::Synthesis: return EncodingStyle::NarrativeHook;
    }
    return EncodingStyle::VisualHook;
}

MemoryEntry encode(const std::vector<EncodeInput>& inputs, EncodingStyle style, int iteration,
                   int loci_grid) {
    if (style == EncodingStyle::Chunking) {
        if (inputs.size() < 2)
            raise(ErrorCode::ChunkTooSmall, "chunking needs at least two insights");
    } else if (inputs.size() != 1) {
        raise(ErrorCode::BadParams, std::string(encoding_style_name(style)) +
                                        " encodes exactly one insight");
    }

    MemoryEntry entry;
    entry.style = style;
    entry.timestamp = iteration;
    for (const auto& in : inputs) {
        entry.source_insights.push_back(in.insight_id);
        entry.source_trust = std::max(entry.source_trust, in.trust);
    }

    switch (style) {
        case EncodingStyle::VisualHook:
            entry.encoded_text = "IMAGE: " + salient_terms(inputs[0].text) + " | " +
                                 inputs[0].text;
            break;
        case EncodingStyle::LociRoom: {
            const uint64_t h = fnv1a64(inputs[0].text);
            const int grid = std::max(loci_grid, 1);
            const int row = static_cast<int>(h % static_cast<uint64_t>(grid));
            const int col =
                static_cast<int>((h / static_cast<uint64_t>(grid)) % static_cast<uint64_t>(grid));
            entry.position = {row, col};
            entry.encoded_text = "ROOM(" + std::to_string(row) + "," + std::to_string(col) +
                                 "): " + inputs[0].text;
            break;
        }
        case EncodingStyle::Chunking: {
            const auto shared = shared_terms(inputs);
            if (shared.empty())
                raise(ErrorCode::NoSharedTerms, "chunked insights share no non-stopword term");
            std::string joined_terms;
            for (const auto& t : shared) {
                if (!joined_terms.empty()) joined_terms += ' ';
                joined_terms += t;
            }
            std::string joined_texts;
            for (const auto& in : inputs) {
                if (!joined_texts.empty()) joined_texts += " | ";
                joined_texts += in.text;
            }
            entry.encoded_text = "CHUNK[" + joined_terms + "]: " + joined_texts;
            break;
        }
        case EncodingStyle::TemporalLadder:
            entry.encoded_text = "T" + std::to_string(iteration) + ": " + inputs[0].text;
            break;
        case EncodingStyle::NarrativeHook: {
            const std::string& text = inputs[0].text;
            const size_t cut = text.find_first_of(",.;:");
            std::string clause = trim(cut == std::string::npos ? text : text.substr(0, cut));
            std::string remainder =
                cut == std::string::npos ? std::string() : trim(text.substr(cut + 1));
            entry.encoded_text = "BECAUSE " + clause + ", THEN " + remainder;
            break;
        }
    }

    entry.retrieval_vector = normalized_term_counts(entry.encoded_text);
    return entry;
}

int Palace::store(MemoryEntry entry) {
    entry.id = next_id_++;
    const int id = entry.id;
    entries_.push_back(std::move(entry));
    if (config_.capacity && entries_.size() > *config_.capacity) {
        auto victim = entries_.begin();
        for (auto it = entries_.begin(); it != entries_.end(); ++it) {
            if (it->source_trust < victim->source_trust) victim = it;
            // ties keep the earlier (oldest) entry as victim
        }
        entries_.erase(victim);
    }
    return id;
}

std::vector<std::pair<MemoryEntry, double>> Palace::retrieve(
    const std::string& query_text, size_t k, Phase phase,
    std::optional<EncodingStyle> style_filter) const {
    std::vector<std::pair<MemoryEntry, double>> scored;
    if (k == 0 || entries_.empty()) return scored;

    // Palace term space: the union of all stored retrieval vectors.
    SparseVec space;
    for (const auto& e : entries_) {
        for (const auto& [term, w] : e.retrieval_vector) space[term] = 1.0;
    }
    const SparseVec query = normalized_term_counts_in_space(query_text, space);

    const EncodingStyle preferred = preferred_style_for_phase(phase);
    for (const auto& e : entries_) {
        if (style_filter && e.style != *style_filter) continue;
        double score = sparse_cosine(query, e.retrieval_vector);
        if (e.style == preferred) score += config_.style_bonus;
        scored.emplace_back(e, score);
    }
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        if (a.first.timestamp != b.first.timestamp) return a.first.timestamp > b.first.timestamp;
        return a.first.id < b.first.id;
    });
    if (scored.size() > k) scored.resize(k);
    return scored;
}

std::vector<std::string> Palace::serialize() const {
    std::vector<std::string> lines;
    for (const auto& e : entries_) {
        std::ostringstream os;
        os << "PALACE_ENTRY id=" << e.id << " style=" << encoding_style_name(e.style)
           << " timestamp=" << e.timestamp << " trust=" << format_double(e.source_trust, 6)
           << " sources=";
        for (size_t i = 0; i < e.source_insights.size(); ++i) {
            if (i) os << ',';
            os << e.source_insights[i];
        }
        if (e.position) os << " position=" << e.position->first << ',' << e.position->second;
        os << " text=" << escape_text(e.encoded_text);
        lines.push_back(os.str());
    }
    return lines;
}

Palace Palace::deserialize(const std::vector<std::string>& lines, PalaceConfig config) {
    Palace palace(std::move(config));
    for (const auto& raw : lines) {
        const std::string line = trim(raw);
        if (line.rfind("PALACE_ENTRY ", 0) != 0) continue;
        MemoryEntry e;
        int id = -1;
        std::istringstream is(line.substr(13));
        std::string field;
        while (is >> field) {
            const auto eq = field.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = field.substr(0, eq);
            std::string value = field.substr(eq + 1);
            if (key == "id") {
                id = std::stoi(value);
            } else if (key == "style") {
                if (auto s = encoding_style_from_name(value)) e.style = *s;
            } else if (key == "timestamp") {
                e.timestamp = std::stoi(value);
            } else if (key == "trust") {
                e.source_trust = std::stod(value);
            } else if (key == "sources") {
                std::istringstream vs(value);
                std::string part;
                while (std::getline(vs, part, ',')) {
                    if (!part.empty()) e.source_insights.push_back(std::stoi(part));
                }
            } else if (key == "position") {
                const auto comma = value.find(',');
                if (comma != std::string::npos) {
                    e.position = {std::stoi(value.substr(0, comma)),
                                  std::stoi(value.substr(comma + 1))};
                }
            } else if (key == "text") {
                // text is the final field and may contain spaces
                std::string rest;
                std::getline(is, rest);
                e.encoded_text = unescape_text(value + rest);
                break;
            }
        }
        e.retrieval_vector = normalized_term_counts(e.encoded_text);
        e.id = id;
        palace.entries_.push_back(std::move(e));
        palace.next_id_ = std::max(palace.next_id_, id + 1);
    }
    return palace;
}

}  // namespace emot
