#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bridgekit {

enum class ErrorCode {
    MalformedToken,
    DuplicatePassage,
    UnpairedCrossing,
    EmptyDiagram,
    MoveNotApplicable,
    UnknownStrand,
    OracleBoundExceeded,
    EdgeOutOfRange,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedToken: return "MalformedToken";
        case ErrorCode::DuplicatePassage: return "DuplicatePassage";
        case ErrorCode::UnpairedCrossing: return "UnpairedCrossing";
        case ErrorCode::EmptyDiagram: return "EmptyDiagram";
        case ErrorCode::MoveNotApplicable: return "MoveNotApplicable";
        case ErrorCode::UnknownStrand: return "UnknownStrand";
        case ErrorCode::OracleBoundExceeded: return "OracleBoundExceeded";
        case ErrorCode::EdgeOutOfRange: return "EdgeOutOfRange";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by apply_move. condition() is the number (1-5) of the violated
/// coloring-move condition.
class MoveNotApplicable : public Error {
public:
    MoveNotApplicable(int condition, const std::string& what)
        : Error(ErrorCode::MoveNotApplicable,
                "condition " + std::to_string(condition) + ": " + what),
          condition_(condition) {}

    int condition() const noexcept { return condition_; }

private:
    int condition_;
};

}  // namespace bridgekit
