#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gq {

enum class ErrorKind {
    DuplicateVertex,
    DuplicateEdgeId,
    DanglingEndpoint,
    InvalidName,
    UnknownVertex,
    EmptySubgraph,
    SyntaxError,
    SchemaError,
    NameCollision,
    NotSimplicial,
    NotConnected,
    NotCTDecomposable,
    SizeLimit,
    InvalidChain,
    InternalMismatch,
    Overflow,
    Unsatisfiable,
};

inline const char* to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::DuplicateVertex: return "DuplicateVertex";
    case ErrorKind::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::InvalidName: return "InvalidName";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::EmptySubgraph: return "EmptySubgraph";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::NameCollision: return "NameCollision";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotCTDecomposable: return "NotCTDecomposable";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Unsatisfiable: return "Unsatisfiable";
    }
    return "UnknownError";
}

/// Exception thrown by every module. Line/column are carried for parse
/// errors (1-based, -1 when not applicable); `detail()` carries vertex names
/// for errors that point at a subgraph (e.g. a non-decomposable block).
class GraphError : public std::runtime_error {
public:
    GraphError(ErrorKind kind, std::string message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind),
          message_(std::move(message))
    {
    }

    GraphError(ErrorKind kind, std::string message, int line, int col)
        : std::runtime_error(std::string(to_string(kind)) + ": " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + message),
          kind_(kind), message_(std::move(message)), line_(line), col_(col)
    {
    }

    GraphError(ErrorKind kind, std::string message, std::vector<std::string> detail)
        : GraphError(kind, std::move(message))
    {
        detail_ = std::move(detail);
    }

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& message() const noexcept { return message_; }
    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }
    const std::vector<std::string>& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string message_;
    int line_ = -1;
    int col_ = -1;
    std::vector<std::string> detail_;
};

} // namespace gq
