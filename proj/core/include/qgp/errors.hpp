#pragma once

#include <stdexcept>
#include <string>

namespace qgp {

// A caller violated a documented precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The requested operation does not exist for the given variant or parameter
// regime (e.g. pointwise J of an ideal cavity, Markovian limit at lambda = 0).
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A numerical evaluation left its domain; carries the time at which the
// problem was detected.
class NumericalDomainError : public std::runtime_error {
public:
    NumericalDomainError(const std::string& what, double t)
        : std::runtime_error(what + " (t = " + std::to_string(t) + ")"), time_(t) {}
    double at_time() const noexcept { return time_; }

private:
    double time_;
};

// A density-matrix trajectory hit an exact eigenvalue degeneracy at an
// interior sample.
class DegenerateTrajectory : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed configuration text; carries a 1-based line number when known.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ConfigError(const std::string& what) : std::runtime_error(what), line_(0) {}
    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qgp
