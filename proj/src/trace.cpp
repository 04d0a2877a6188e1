#include "emot/trace.hpp"

#include <sstream>

namespace emot {

int Trace::add(int iteration, const std::string& kind, const std::string& payload) {
    TraceEvent event;
    event.ordinal = static_cast<int>(events_.size());
    event.iteration = iteration;
    event.kind = kind;
    event.payload = payload;
    events_.push_back(std::move(event));
    return events_.back().ordinal;
}

int Trace::count_kind(const std::string& kind) const {
    int count = 0;
    for (const auto& e : events_) {
        if (e.kind == kind) ++count;
    }
    return count;
}

bool Trace::any_payload_contains(const std::string& kind, const std::string& needle) const {
    for (const auto& e : events_) {
        if (e.kind == kind && e.payload.find(needle) != std::string::npos) return true;
    }
    return false;
}

std::vector<const TraceEvent*> Trace::events_of_kind(const std::string& kind) const {
    std::vector<const TraceEvent*> out;
    for (const auto& e : events_) {
        if (e.kind == kind) out.push_back(&e);
    }
    return out;
}

std::string Trace::escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
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

std::string Trace::to_text() const {
    std::ostringstream os;
    os << "EMOT-TRACE v1\n";
    for (const auto& line : header_) os << line << '\n';
    os << "EVENTS\n";
    for (const auto& e : events_) {
        os << e.ordinal << '|' << e.iteration << '|' << e.kind << '|' << escape(e.payload)
           << '\n';
    }
    os << "END_EVENTS\n";
    for (const auto& line : footer_) os << line << '\n';
    return os.str();
}

}  // namespace emot
