#pragma once

#include <stdexcept>
#include <string>

namespace operadkit {

enum class ErrorKind {
    Parse,              // malformed DSL, JSON or rational text
    UnknownName,        // catalog entry, generator, operation or functor not found
    DimensionMismatch,  // ambient sizes or arities disagree
    Capacity,           // arity or work estimate above the configured ceiling
    Degenerate,         // singular pairing in strict mode
    NotInvertible,      // change of generators that is not an isomorphism
    Domain,             // mathematically invalid input (division by zero, a_1 != 1, ...)
};

/// Every failure raised by the library. CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace operadkit
