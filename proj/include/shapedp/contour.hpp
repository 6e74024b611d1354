#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shapedp/geometry.hpp"

namespace shapedp {

/// Orientation in image coordinates (y down). Clockwise on screen means a
/// positive shoelace sum computed on the raw coordinates.
enum class Orientation { Clockwise, CounterClockwise };

/// Signed shoelace area of the closed polygon through `points`.
double signed_area(std::span<const Point2> points);

/// Length of the closed polyline (last point joins the first).
double closed_perimeter(std::span<const Point2> points);

/// Closed, ordered 2D outline.
///
/// Construction drops consecutive duplicates (including a repeated first
/// point at the end) and rejects fewer than three remaining points. The
/// orientation is derived from the shoelace sign; degenerate zero-area
/// outlines report Clockwise.
class Contour {
public:
    explicit Contour(std::vector<Point2> points);

    std::span<const Point2> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    const Point2& operator[](std::size_t i) const { return points_[i]; }
    Orientation orientation() const noexcept { return orientation_; }

    double signed_area() const { return shapedp::signed_area(points_); }
    double perimeter() const { return closed_perimeter(points_); }

    /// Same outline traversed the other way, keeping points()[0] first.
    Contour reversed() const;
    /// Same outline with points()[start] moved to the front.
    Contour rotated_start(std::size_t start) const;

private:
    std::vector<Point2> points_;
    Orientation orientation_;
};

/// `n` points equally spaced by arc length along the closed polyline,
/// starting at the first input point.
Contour resample(const Contour& contour, std::size_t n);

/// Vertex mean of the contour points.
Point2 centroid(std::span<const Point2> points);

struct NormalizationRecord {
    Point2 centroid;
    double scale = 1.0;  // mean distance to centroid before scaling

    Point2 to_original(Point2 p) const { return centroid + scale * p; }
};

struct NormalizedContour {
    Contour contour;
    NormalizationRecord record;
};

/// Centroid to the origin, mean distance from the centroid to one.
NormalizedContour normalize(const Contour& contour);

}  // namespace shapedp
