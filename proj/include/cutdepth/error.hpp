#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutdepth {

enum class ErrorKind {
    InvalidInput,
    NotPositiveDefinite,
    Singular,
    DegenerateConstraint,
    PointOutsideHull,
    PointOutsidePolyhedron,
    EmptyPolyhedron,
    IterationLimit,
    OnDisjunctionBoundary,
    AllZeroAlpha,
    DimensionTooSmall,
    DimensionTooLarge,
    RankDeficientBasis,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI, the Python bindings) can map them without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cutdepth
