#pragma once

#include <stdexcept>
#include <string>

namespace santalo {

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 0 is not strictly inside the body; polarity and norm operations need it.
struct OriginNotInterior : GeometryError {
    OriginNotInterior() : GeometryError("origin is not in the interior of the body") {}
};

struct PointNotInterior : GeometryError {
    PointNotInterior() : GeometryError("point is not in the interior of the body") {}
};

struct ZeroDirection : GeometryError {
    ZeroDirection() : GeometryError("direction vector must be nonzero") {}
};

struct DegenerateBody : GeometryError {
    explicit DegenerateBody(const std::string& what = "body has empty interior")
        : GeometryError(what) {}
};

struct DimensionMismatch : GeometryError {
    DimensionMismatch() : GeometryError("bodies have different ambient dimensions") {}
};

struct WrongDimension : GeometryError {
    explicit WrongDimension(const std::string& what) : GeometryError(what) {}
};

struct CurvatureDegenerate : GeometryError {
    CurvatureDegenerate() : GeometryError("boundary curvature is numerically degenerate") {}
};

struct SpecError : GeometryError {
    explicit SpecError(const std::string& what) : GeometryError(what) {}
};

}  // namespace santalo
