#pragma once

#include <cstddef>
#include <vector>

#include "shapedp/contour.hpp"

namespace shapedp {

enum class CircleCenter { Centroid, MinimalEnclosing };

struct ArpConfig {
    std::size_t rings = 4;    // radial partitions
    std::size_t wedges = 8;   // angular partitions
    double start_angle = 0.0; // clockwise offset of wedge 0 from +x
    CircleCenter center = CircleCenter::Centroid;

    double wedge_angle() const { return kTwoPi / static_cast<double>(wedges); }
    void validate() const;
};

struct SurroundingCircle {
    Point2 center;
    double radius = 0.0;
};

/// Relative slack applied to R so that the farthest point lies inside.
inline constexpr double kCircleSlack = 1e-9;

SurroundingCircle surrounding_circle(const Contour& contour, CircleCenter mode = CircleCenter::Centroid);
SurroundingCircle minimal_enclosing_circle(std::span<const Point2> points);

struct SectorId {
    std::size_t ring = 0;
    std::size_t wedge = 0;
    std::size_t ordinal = 1;  // ring * wedges + wedge + 1

    friend bool operator==(const SectorId&, const SectorId&) = default;
};

SectorId sector_of_point(Point2 p, const SurroundingCircle& circle, const ArpConfig& cfg);

/// Consecutive contour indices start, start+1, ... (mod contour size).
struct Run {
    std::size_t start = 0;
    std::size_t length = 0;
};

struct SectorSlice {
    SectorId sector;
    std::vector<Run> runs;
};

/// Slices for the non-empty sectors in ascending ordinal order. A run that
/// wraps past the last index back to index 0 is kept whole.
std::vector<SectorSlice> partition_contour(const Contour& contour, const SurroundingCircle& circle,
                                           const ArpConfig& cfg);

std::vector<Point2> run_points(const Contour& contour, const Run& run);

}  // namespace shapedp
