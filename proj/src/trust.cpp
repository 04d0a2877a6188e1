#include "emot/trust.hpp"

#include <cctype>
#include <cstdlib>

#include "emot/errors.hpp"
#include "emot/text.hpp"

namespace emot {

namespace {

void check_unit_interval(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        raise(ErrorCode::OutOfRange, std::string(name) + " must lie in [0,1], got " +
                                         format_double(v, 6));
}

// Parses "<KEY>=<float>" at position pos, skipping leading spaces.
bool parse_dim(const std::string& line, size_t& pos, char key, double& out) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos + 1 >= line.size()) return false;
    if (std::toupper(static_cast<unsigned char>(line[pos])) != key) return false;
    ++pos;
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos >= line.size() || line[pos] != '=') return false;
    ++pos;
    while (pos < line.size() && line[pos] == ' ') ++pos;
    const char* begin = line.c_str() + pos;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) return false;
    pos += static_cast<size_t>(end - begin);
    out = v;
    return true;
}

}  // namespace

TrustScore compute_trust(double s, double n, double d, double c, const TrustWeights& weights) {
    check_unit_interval(s, "s");
    check_unit_interval(n, "n");
    check_unit_interval(d, "d");
    check_unit_interval(c, "c");
    TrustScore t;
    t.s = s;
    t.n = n;
    t.d = d;
    t.c = c;
    t.composite = weights.s * s + weights.n * n + weights.d * d + weights.c * c;
    return t;
}

bool is_dormancy_candidate(const TrustScore& t, double threshold) {
    check_unit_interval(threshold, "threshold");
    return t.composite < threshold;
}

TrustScore fallback_trust(const TrustWeights& weights) {
    return compute_trust(0.5, 0.5, 0.5, 0.5, weights);
}

std::optional<TrustScore> parse_trust_reply(const std::string& reply_text,
                                            const TrustWeights& weights) {
    for (const auto& line : split_lines(reply_text)) {
        size_t pos = 0;
        double s = 0, n = 0, d = 0, c = 0;
        if (parse_dim(line, pos, 'S', s) && parse_dim(line, pos, 'N', n) &&
            parse_dim(line, pos, 'D', d) && parse_dim(line, pos, 'C', c)) {
            const auto in_range = [](double v) { return v >= 0.0 && v <= 1.0; };
            if (in_range(s) && in_range(n) && in_range(d) && in_range(c)) {
                return compute_trust(s, n, d, c, weights);
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::string build_trust_prompt(const std::string& role_tag, const std::string& level_name) {
    return "TRUST ASSESSMENT\nUNIT: " + role_tag + "\nLEVEL: " + level_name +
           "\nRate the reasoning unit above on success likelihood (S), novelty (N), depth (D) "
           "and coherence (C), each in [0,1].\nReply with exactly one line: S=<v> N=<v> D=<v> "
           "C=<v>";
}

std::string build_text_trust_prompt(const std::string& text) {
    return "TRUST ASSESSMENT\nTEXT:\n" + text +
           "\nRate the text above on success likelihood (S), novelty (N), depth (D) and "
           "coherence (C), each in [0,1].\nReply with exactly one line: S=<v> N=<v> D=<v> C=<v>";
}

TrustScore assess_with(const CompletionFn& complete, const std::string& prompt,
                       const TrustWeights& weights) {
    const std::string reply = complete(prompt);
    if (auto parsed = parse_trust_reply(reply, weights)) return *parsed;
    return fallback_trust(weights);
}

}  // namespace emot
