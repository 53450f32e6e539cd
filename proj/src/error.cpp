#include "trisep/error.hpp"

#include <utility>

namespace trisep {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::FewerThanThreePoints: return "FewerThanThreePoints";
    case ErrorKind::AllCollinear: return "AllCollinear";
    case ErrorKind::PointInsideHull: return "PointInsideHull";
    case ErrorKind::PointOnHullBoundary: return "PointOnHullBoundary";
    case ErrorKind::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorKind::OriginOutside: return "OriginOutside";
    case ErrorKind::RedInsideHull: return "RedInsideHull";
    case ErrorKind::GeneralPositionViolation: return "GeneralPositionViolation";
    case ErrorKind::InsideHull: return "InsideHull";
    case ErrorKind::NonConvexEnvironment: return "NonConvexEnvironment";
    case ErrorKind::SceneTooLarge: return "SceneTooLarge";
    case ErrorKind::Syntax: return "Syntax";
    case ErrorKind::NonSimplePolygon: return "NonSimplePolygon";
    case ErrorKind::PointOutsideEnvironment: return "PointOutsideEnvironment";
    case ErrorKind::GenerationFailed: return "GenerationFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::optional<std::size_t> index)
    : std::runtime_error(std::string(to_string(kind)) + ": " + std::move(message))
    , kind_(kind)
    , index_(index)
{}

} // namespace trisep
