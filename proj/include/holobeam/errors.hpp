// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace holobeam {

// Error taxonomy shared by all modules. kind() is a stable machine-readable
// class name; the CLI maps each kind to a distinct nonzero exit code.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct InvalidArgumentError : Error {
    explicit InvalidArgumentError(const std::string& m) : Error("invalid-argument", m) {}
};

struct GeometricDegeneracyError : Error {
    explicit GeometricDegeneracyError(const std::string& m) : Error("geometric-degeneracy", m) {}
};

struct InvalidScenarioError : Error {
    explicit InvalidScenarioError(const std::string& m) : Error("invalid-scenario", m) {}
};

struct DegenerateChannelError : Error {
    explicit DegenerateChannelError(const std::string& m) : Error("degenerate-channel", m) {}
};

struct CoverageError : Error {
    explicit CoverageError(const std::string& m) : Error("coverage", m) {}
};

struct InvalidSweepError : Error {
    explicit InvalidSweepError(const std::string& m) : Error("invalid-sweep", m) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& m) : Error("config", m) {}
};

struct IoError : Error {
    explicit IoError(const std::string& m) : Error("io", m) {}
};

}  // namespace holobeam
