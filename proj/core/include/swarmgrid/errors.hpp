#pragma once

#include <stdexcept>
#include <string>

namespace swarmgrid {

/// Malformed or inconsistent input data (CSV rows, config keys, ranges).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A structurally valid configuration that cannot be acted on (missing scale
/// model, conflicting options, bad search bounds).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// No admissible swarm size exists for some hour at the requested cell size.
class CoverageInfeasibleError : public std::runtime_error {
public:
    explicit CoverageInfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// No generation/storage combination fits the budget.
class BudgetInfeasibleError : public std::runtime_error {
public:
    explicit BudgetInfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// A sortie cannot be flown: transit exceeds the flight window or the hover
/// headwind exceeds the airframe envelope.
class InfeasibleFlightError : public std::runtime_error {
public:
    explicit InfeasibleFlightError(const std::string& what) : std::runtime_error(what) {}
};

/// The elevation-angle stationarity condition has no interior root.
class NoInteriorOptimumError : public std::runtime_error {
public:
    explicit NoInteriorOptimumError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace swarmgrid
