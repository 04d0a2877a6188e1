#include "emot/errors.hpp"

namespace emot {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownNode: return "UnknownNode";
        case ErrorCode::LevelViolation: return "LevelViolation";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::SdcDisabled: return "SdcDisabled";
        case ErrorCode::NotACandidate: return "NotACandidate";
        case ErrorCode::ChunkTooSmall: return "ChunkTooSmall";
        case ErrorCode::NoSharedTerms: return "NoSharedTerms";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::EmptyPrompt: return "EmptyPrompt";
        case ErrorCode::Timeout: return "Timeout";
        case ErrorCode::ProviderError: return "ProviderError";
        case ErrorCode::UnknownBackendName: return "UnknownBackendName";
        case ErrorCode::MissingCriterion: return "MissingCriterion";
        case ErrorCode::OutOfRangeScore: return "OutOfRangeScore";
        case ErrorCode::JudgeParseFailure: return "JudgeParseFailure";
        case ErrorCode::NoAnswerFound: return "NoAnswerFound";
        case ErrorCode::NoActiveNodes: return "NoActiveNodes";
        case ErrorCode::PairingRequired: return "PairingRequired";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

}  // namespace emot
