#pragma once

#include <stdexcept>
#include <string>

namespace bisite {

// Base class for all domain errors raised by the library.
struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

// Two input points coincide where distinct points are required.
struct DuplicatePoint : GeometryError {
    explicit DuplicatePoint(const std::string& msg = "duplicate point") : GeometryError(msg) {}
};

// All three input points coincide.
struct AllCoincident : GeometryError {
    explicit AllCoincident(const std::string& msg = "all points coincident") : GeometryError(msg) {}
};

// A segment with zero length was passed where a proper segment is required.
struct DegenerateSegment : GeometryError {
    explicit DegenerateSegment(const std::string& msg = "degenerate segment") : GeometryError(msg) {}
};

// The two sites of a pair coincide.
struct CoincidentSites : GeometryError {
    explicit CoincidentSites(const std::string& msg = "coincident sites") : GeometryError(msg) {}
};

// Input set is degenerate for the requested structure (e.g. all collinear).
struct DegenerateInput : GeometryError {
    explicit DegenerateInput(const std::string& msg = "degenerate input") : GeometryError(msg) {}
};

// Raster evaluation was requested with an empty candidate-pair list.
struct EmptyCandidates : GeometryError {
    explicit EmptyCandidates(const std::string& msg = "empty candidate list") : GeometryError(msg) {}
};

// A randomized generator failed to satisfy its genericity checks within the retry budget.
struct GenericityFailure : GeometryError {
    explicit GenericityFailure(const std::string& msg = "genericity check failed") : GeometryError(msg) {}
};

// Verification precondition failed: the site set has no unique closest pair.
struct NoUniqueClosestPair : GeometryError {
    explicit NoUniqueClosestPair(const std::string& msg = "no unique closest pair") : GeometryError(msg) {}
};

// Generic verification precondition failure (reported, maps to a dedicated CLI exit code).
struct PreconditionError : GeometryError {
    explicit PreconditionError(const std::string& msg = "precondition failed") : GeometryError(msg) {}
};

}  // namespace bisite
