#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trisep {

enum class ErrorKind {
    FewerThanThreePoints,
    AllCollinear,
    PointInsideHull,
    PointOnHullBoundary,
    DegenerateTriangle,
    OriginOutside,
    RedInsideHull,
    GeneralPositionViolation,
    InsideHull,
    NonConvexEnvironment,
    SceneTooLarge,
    Syntax,
    NonSimplePolygon,
    PointOutsideEnvironment,
    GenerationFailed,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports is an Error carrying a kind, and for
// point-specific failures the index of the offending point.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message, std::optional<std::size_t> index = std::nullopt);

    ErrorKind kind() const noexcept { return kind_; }
    const std::optional<std::size_t>& index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> index_;
};

} // namespace trisep
