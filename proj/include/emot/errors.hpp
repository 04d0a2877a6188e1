#pragma once

#include <stdexcept>
#include <string>

namespace emot {

enum class ErrorCode {
    UnknownNode,
    LevelViolation,
    OutOfRange,
    SdcDisabled,
    NotACandidate,
    ChunkTooSmall,
    NoSharedTerms,
    EmptyCorpus,
    DimensionMismatch,
    BadParams,
    EmptyPrompt,
    Timeout,
    ProviderError,
    UnknownBackendName,
    MissingCriterion,
    OutOfRangeScore,
    JudgeParseFailure,
    NoAnswerFound,
    NoActiveNodes,
    PairingRequired,
    ConfigError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace emot
