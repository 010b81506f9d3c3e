#pragma once

#include <stdexcept>
#include <string>

namespace hhodge {

// All recoverable failures are typed exceptions so callers (and the CLI)
// can map them to exit codes without string matching.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in Q(zeta24)") {}
};

struct NotRational : Error {
    explicit NotRational(const std::string& ctx)
        : Error("value is not rational: " + ctx) {}
};

struct VariableMismatch : Error {
    explicit VariableMismatch(const std::string& ctx)
        : Error("series variable mismatch: " + ctx) {}
};

struct DegreeOutOfRange : Error {
    explicit DegreeOutOfRange(const std::string& ctx)
        : Error("degree exceeds truncation order: " + ctx) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& ctx)
        : Error("tangent pole: " + ctx) {}
};

struct UnsupportedAngle : Error {
    explicit UnsupportedAngle(const std::string& ctx)
        : Error("angle is not a multiple of pi/12: " + ctx) {}
};

struct UnsupportedGroup : Error {
    explicit UnsupportedGroup(const std::string& ctx)
        : Error("operation not defined for group: " + ctx) {}
};

struct RootNotFound : Error {
    RootNotFound() : Error("vector is not a positive root of this system") {}
};

struct MissingEntry : Error {
    explicit MissingEntry(const std::string& ctx)
        : Error("table has no entry: " + ctx) {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& ctx)
        : Error("linear system does not determine all unknowns: " + ctx) {}
};

struct InconsistentSystem : Error {
    explicit InconsistentSystem(const std::string& ctx)
        : Error("linear system is inconsistent: " + ctx) {}
};

struct DeterminantZero : Error {
    explicit DeterminantZero(const std::string& ctx)
        : Error("alternating binomial determinant vanished: " + ctx) {}
};

struct BranchAmbiguity : Error {
    explicit BranchAmbiguity(const std::string& ctx)
        : Error("quadratic branch not determined by initial value: " + ctx) {}
};

struct LeadingCoefficientZero : Error {
    explicit LeadingCoefficientZero(const std::string& ctx)
        : Error("recurrence leading coefficient vanished: " + ctx) {}
};

struct InconsistentSquares : Error {
    explicit InconsistentSquares(const std::string& ctx)
        : Error("recovered square series are inconsistent: " + ctx) {}
};

}  // namespace hhodge
