#include "emot/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <unordered_set>

namespace emot {

namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ull;
constexpr uint64_t kFnvPrime = 1099511628211ull;

// Fixed stopword list; shipping it with the artifact keeps
// vectorisation bit-reproducible across environments.
const std::unordered_set<std::string>& stopwords() {
    static const std::unordered_set<std::string> kStopwords = {
        "a",    "about", "after", "all",   "an",    "and",   "any",  "are",  "as",
        "at",   "be",    "been",  "but",   "by",    "can",   "did",  "do",   "does",
        "for",  "from",  "had",   "has",   "have",  "he",    "her",  "his",  "how",
        "if",   "in",    "into",  "is",    "it",    "its",   "no",   "not",  "of",
        "on",   "or",    "our",   "she",   "so",    "some",  "such", "than", "that",
        "the",  "their", "then",  "there", "these", "they",  "this", "those", "to",
        "was",  "we",    "were",  "what",  "when",  "which", "who",  "will", "with",
        "you",  "your",
    };
    return kStopwords;
}

}  // namespace

uint64_t fnv1a64(std::string_view bytes, uint64_t basis) {
    uint64_t h = basis;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= kFnvPrime;
    }
    return h;
}

uint64_t fnv1a64(std::string_view bytes) { return fnv1a64(bytes, kFnvOffset); }

std::vector<std::string> raw_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (!current.empty()) {
            if (current.size() >= 2) out.push_back(current);
            current.clear();
        }
    }
    if (current.size() >= 2) out.push_back(current);
    return out;
}

bool is_stopword(const std::string& token) { return stopwords().count(token) > 0; }

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    for (auto& tok : raw_tokens(text)) {
        if (!is_stopword(tok)) out.push_back(std::move(tok));
    }
    return out;
}

double sparse_norm(const SparseVec& v) {
    double sum = 0.0;
    for (const auto& [term, w] : v) sum += w * w;
    return std::sqrt(sum);
}

void sparse_normalize(SparseVec& v) {
    const double norm = sparse_norm(v);
    if (norm == 0.0) return;
    for (auto& [term, w] : v) w /= norm;
}

SparseVec normalized_term_counts(const std::string& text) {
    SparseVec counts;
    for (const auto& tok : tokenize(text)) counts[tok] += 1.0;
    sparse_normalize(counts);
    return counts;
}

SparseVec normalized_term_counts_in_space(const std::string& text, const SparseVec& space) {
    SparseVec counts;
    for (const auto& tok : tokenize(text)) {
        if (space.count(tok)) counts[tok] += 1.0;
    }
    sparse_normalize(counts);
    return counts;
}

double sparse_cosine(const SparseVec& a, const SparseVec& b) {
    if (a.empty() || b.empty()) return 0.0;
    const SparseVec& small = a.size() <= b.size() ? a : b;
    const SparseVec& large = a.size() <= b.size() ? b : a;
    double dot = 0.0;
    for (const auto& [term, w] : small) {
        auto it = large.find(term);
        if (it != large.end()) dot += w * it->second;
    }
    return dot;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(current);
    return lines;
}

std::string trim(const std::string& s) {
    size_t begin = 0;
    size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

std::string to_lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string format_double(double value, int decimals) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*f", decimals, value);
    return std::string(buf.data());
}

}  // namespace emot
