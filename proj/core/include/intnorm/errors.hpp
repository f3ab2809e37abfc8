#pragma once

#include <stdexcept>
#include <string>

namespace intnorm {

/// Input text that cannot be read as a ribbon-graph, class vector or
/// polygon file.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Well-formed input that violates a structural invariant (fixed point in
/// the edge involution, disconnected graph, surface-changing smoothing).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Smoothing a crossing would leave a closed strand through no vertex,
/// which the ribbon structure cannot represent.
struct DegenerateSmoothing : std::runtime_error {
    explicit DegenerateSmoothing(const std::string& msg) : std::runtime_error(msg) {}
};

/// A coorientation failed the per-vertex balance condition; its class
/// would depend on the choice of basis representatives.
struct NotClosed : std::runtime_error {
    explicit NotClosed(const std::string& msg) : std::runtime_error(msg) {}
};

/// An enumeration exceeded its configured cap.
struct ResourceLimit : std::runtime_error {
    explicit ResourceLimit(const std::string& msg) : std::runtime_error(msg) {}
};

/// The iterative-deepening minimizer hit its bound cap before two
/// consecutive bounds agreed.
struct Unconverged : std::runtime_error {
    explicit Unconverged(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

/// Norm operations on a genus-0 surface (H_1 = 0, the norm vanishes).
struct TrivialNorm : std::runtime_error {
    explicit TrivialNorm(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotSymmetric : std::runtime_error {
    explicit NotSymmetric(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParityFailure : std::runtime_error {
    explicit ParityFailure(const std::string& msg) : std::runtime_error(msg) {}
};

/// Polygon input that is a point or a segment rather than a 2-dimensional
/// polygon.
struct Degenerate : std::runtime_error {
    explicit Degenerate(const std::string& msg) : std::runtime_error(msg) {}
};

/// A geodesic collection with fewer than two distinct slopes does not fill
/// the torus.
struct SingleSlope : std::runtime_error {
    explicit SingleSlope(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace intnorm
