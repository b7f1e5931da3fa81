#pragma once

#include <stdexcept>
#include <string>

namespace leosim {

// Bad or inconsistent configuration. The message names the offending field.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Lookup of an id that does not exist (satellite, gateway, table entry).
class LookupError : public std::runtime_error {
public:
    explicit LookupError(const std::string& msg) : std::runtime_error(msg) {}
};

// No satellite visible from a gateway at the requested time.
class CoverageGapError : public std::runtime_error {
public:
    CoverageGapError(const std::string& gateway_id, double time_s)
        : std::runtime_error("no visible satellite for gateway '" + gateway_id +
                             "' at t=" + std::to_string(time_s) + " s"),
          gateway(gateway_id),
          time(time_s) {}
    std::string gateway;
    double time;
};

// Physically invalid input to a pure computation (nonpositive power, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant violated; the run must abort.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace leosim
