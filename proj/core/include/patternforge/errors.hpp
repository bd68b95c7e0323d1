#pragma once

#include <stdexcept>
#include <string>

namespace patternforge {

enum class ErrorCode {
    DuplicateId,
    ArityMismatch,
    SyntaxError,
    UnknownPredicate,
    UnknownTypeName,
    InvalidPattern,
    SizeGuard,
    ConfigTooSmall,
    UnknownClause,
    ZeroDuration,
    ZeroInferences,
    ZeroEdges,
    IoError,
    Internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace patternforge
