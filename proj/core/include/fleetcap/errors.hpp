#pragma once

#include <stdexcept>
#include <string>

namespace fleetcap {

// Error classes map onto the CLI exit-code families:
//   1 = usage, 2 = data, 3 = numerical.
class Error : public std::runtime_error {
public:
    enum class Kind { usage = 1, data = 2, numerical = 3 };

    Error(Kind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    Kind kind_;
};

class UsageError : public Error {
public:
    explicit UsageError(std::string message) : Error(Kind::usage, std::move(message)) {}
};

// Malformed or semantically invalid input data (bad CSV row, negative
// quantity, duplicate key, missing year, ...).
class DataError : public Error {
public:
    explicit DataError(std::string message) : Error(Kind::data, std::move(message)) {}
};

// Numerical failures: solver breakdown, rank deficiency, degenerate samples.
class NumericalError : public Error {
public:
    explicit NumericalError(std::string message) : Error(Kind::numerical, std::move(message)) {}
};

} // namespace fleetcap
