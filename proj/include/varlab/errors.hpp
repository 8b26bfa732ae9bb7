#pragma once

#include <stdexcept>
#include <string>

namespace varlab {

// Error taxonomy shared across modules; the CLI maps these to exit codes.

// Bad configuration / unsupported request.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Solver-level failures (no bracket, lost ellipticity, quadrature self-check...).
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

class HadamardViolation : public SolverError {
public:
    explicit HadamardViolation(const std::string& what) : SolverError(what) {}
};

class TractionJumpViolation : public SolverError {
public:
    explicit TractionJumpViolation(const std::string& what) : SolverError(what) {}
};

class EllipticityLossError : public SolverError {
public:
    explicit EllipticityLossError(const std::string& what) : SolverError(what) {}
};

class BracketError : public SolverError {
public:
    explicit BracketError(const std::string& what) : SolverError(what) {}
};

// Evaluation requested too close to a declared jump surface or singular point.
class NearSingularityError : public SolverError {
public:
    explicit NearSingularityError(const std::string& what) : SolverError(what) {}
};

}  // namespace varlab
