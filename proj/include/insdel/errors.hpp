#pragma once

#include <stdexcept>
#include <string>

namespace insdel {

// Invalid edit-script position at the moment of application.
struct ScriptError : std::runtime_error {
    explicit ScriptError(const std::string& what) : std::runtime_error(what) {}
};

// Codebook construction could not reach the requested size.
struct CapacityError : std::runtime_error {
    CapacityError(const std::string& what, std::size_t achieved)
        : std::runtime_error(what), achieved_count(achieved) {}
    std::size_t achieved_count;
};

// A derived-parameter constraint failed; message names the inequality.
struct ParamError : std::runtime_error {
    explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

// Block geometry does not fit (tau does not divide m, index field too narrow, ...).
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched or unknown configuration (strategy names, codebook/outer mismatch, ...).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Inconsistent trial data handed to the analyzer.
struct AnalysisError : std::runtime_error {
    explicit AnalysisError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent edit-script trace.
struct TraceError : std::runtime_error {
    explicit TraceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace insdel
