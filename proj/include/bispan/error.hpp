#pragma once

#include <stdexcept>
#include <string>

namespace bispan {

enum class ErrorKind {
    LoopEdge,
    VertexOutOfRange,
    EmptySet,
    EdgeInTree,
    EdgeNotInTree,
    NotATree,
    Disconnected,
    TooLarge,
    NotBispanning,
    NotAtomic,
    WrongDegree,
    SameEdge,
    NoSuchEdge,
    NotApplicable,
    InvalidExchange,
    LengthMismatch,
    InvalidInput,
    SeamMismatch,
    FormMismatch,
    NotBispanningSubgraph,
    IsoCheckFailed,
    CompositionMismatch,
    UnknownName,
    WrongPhase,
    UnknownEdge,
    IllegalFix,
    EmptyHistory,
    Parse,
};

const char* to_string(ErrorKind k);

// recoverable domain error
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// a broken internal invariant (a bug, not bad input)
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace bispan
