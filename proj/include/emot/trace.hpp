#pragma once

#include <string>
#include <vector>

namespace emot {

struct TraceEvent {
    int ordinal = 0;
    int iteration = 0;  // 0 for run-level events
    std::string kind;
    std::string payload;
};

// Ordered event log for one run. Serializes to a line-oriented text
// document: header (config echo, topology), one event per line,
// footer (palace contents, ledger, status, internal quality).
// Under the stub backend the serialization is byte-reproducible.
class Trace {
public:
    void set_header_line(const std::string& line) { header_.push_back(line); }
    void set_footer_line(const std::string& line) { footer_.push_back(line); }

    int add(int iteration, const std::string& kind, const std::string& payload);

    const std::vector<TraceEvent>& events() const { return events_; }

    int count_kind(const std::string& kind) const;
    bool any_payload_contains(const std::string& kind, const std::string& needle) const;
    std::vector<const TraceEvent*> events_of_kind(const std::string& kind) const;

    std::string to_text() const;

    // Escapes newlines/backslashes so payload text stays one line.
    static std::string escape(const std::string& text);

private:
    std::vector<std::string> header_;
    std::vector<std::string> footer_;
    std::vector<TraceEvent> events_;
};

}  // namespace emot
