#ifndef QWCAVITY_ERRORS_HPP
#define QWCAVITY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwcavity {

/// Argument outside the mathematical domain of an operation (bad basis pair,
/// photon number out of range).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A computation lost numerical validity: the state decayed below the
/// renormalization floor, or an eigenvalue went meaningfully negative.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error("config key '" + key + "': " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Malformed input data (too-short series, missing csv column, time out of range).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Process exit codes used by the command line tool.
enum class ExitCode : int {
    ok = 0,
    config = 2,
    numeric = 3,
    io = 4,
    input = 5,
};

} // namespace qwcavity

#endif
