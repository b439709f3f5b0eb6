#pragma once

#include <stdexcept>
#include <string>

namespace camel {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// circuit / parsing
struct SyntaxError : Error {
    SyntaxError(int line, int col, const std::string& what_)
        : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": " + what_),
          line(line), col(col) {}
    int line, col;
};
struct UnsupportedGate : Error {
    explicit UnsupportedGate(const std::string& name)
        : Error("unsupported gate: " + name), name(name) {}
    std::string name;
};
struct QubitOutOfRange : Error {
    using Error::Error;
};
struct MissingDuration : Error {
    using Error::Error;
};
struct NotDownwardClosed : Error {
    using Error::Error;
};

// chip model / config
struct InvalidDimensions : Error {
    using Error::Error;
};
struct DisconnectedGraph : Error {
    using Error::Error;
};
struct WindowTooLarge : Error {
    using Error::Error;
};
struct SchemaError : Error {
    SchemaError(const std::string& path, const std::string& reason)
        : Error("config error at " + path + ": " + reason), path(path), reason(reason) {}
    std::string path, reason;
};

// mapper / scheduler
struct CircuitTooLarge : Error {
    using Error::Error;
};
struct NoProgress : Error {
    using Error::Error;
};
struct CycleIntroduced : Error {
    using Error::Error;
};

// noise / oracle
struct TooManyQubits : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct PatternMismatch : Error {
    using Error::Error;
};
struct UnknownBenchmark : Error {
    using Error::Error;
};

/// Raised when a compiled artifact fails its own validity checks
/// (maps to CLI exit code 2).
struct InternalInvariantViolation : Error {
    using Error::Error;
};

} // namespace camel
