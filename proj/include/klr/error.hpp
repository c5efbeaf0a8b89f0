#pragma once

#include <stdexcept>
#include <string>

namespace klr {

enum class ErrorKind {
    IndexOutOfRange,
    NoSolution,
    InsufficientMultiplicity,
    LevelTooSmall,
    VertexNotFound,
    IterationCapExceeded,
    NodeNotRemovable,
    ContentMismatch,
    InvalidGraph,
    UnsupportedGraph,
    LocalAlgebraUnsupported,
    ParameterRange,
    SearchSpaceExceeded,
    EnumerationCapExceeded,
};

const char* to_string(ErrorKind kind);

// Domain errors raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace klr
