#pragma once

#include <stdexcept>
#include <string>

namespace acttend {

// Invalid user-supplied configuration (bad ranges, flags, parameter bounds).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Data that violates an operation's preconditions (too few points, bad shapes).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed files: wrong magic, truncated payload, inconsistent headers.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal shape/dimension mismatches between composed pieces.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

// Degenerate numeric input that makes an operation undefined (e.g. zero-norm
// vector under cosine similarity).
struct DegenerateInputError : std::runtime_error {
    explicit DegenerateInputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem failures.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Lookup of an id that does not exist.
struct LookupError : std::runtime_error {
    explicit LookupError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace acttend
