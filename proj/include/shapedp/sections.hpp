#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shapedp/arp.hpp"
#include "shapedp/contour.hpp"

namespace shapedp {

enum class SectionKind { Line, Convex, Concave };

const char* to_string(SectionKind kind);

struct SectionConfig {
    std::size_t window = 5;   // centred moving-average width for the turn signal
    double line_eps = 1e-6;   // |smoothed turn| below this is straight

    void validate() const;
};

struct Section {
    SectionKind kind = SectionKind::Line;
    Point2 first;
    Point2 last;
    std::vector<Point2> points;
    double area = 0.0;    // chord-closed area over pi R^2
    double alpha = 0.0;   // chord inclination in [0, pi)
    double degree = 0.0;  // max distance to chord over chord length
    double d1 = 0.0;      // |first - O| / R
    double d2 = 0.0;      // |last - O| / R
};

/// Per-point labels and split positions of a run.
struct RunSegmentation {
    std::vector<SectionKind> labels;
    std::vector<std::size_t> splits;  // indices where a new section begins
};

/// Turn at each interior vertex is the sine of the turning angle,
/// smoothed over the window. `orientation` decides which sign is Convex:
/// turning with the outline's own direction bulges outward.
RunSegmentation segment_run(std::span<const Point2> points, Orientation orientation, const SectionConfig& cfg);

/// Split indices only; runs shorter than three points never split.
std::vector<std::size_t> detect_inflexions(std::span<const Point2> points, Orientation orientation,
                                           const SectionConfig& cfg = {});

/// Splits the run at its inflexions and measures every section. Neighbouring
/// sections share their boundary point.
std::vector<Section> make_sections(std::span<const Point2> points, const SurroundingCircle& circle,
                                   Orientation orientation, const SectionConfig& cfg = {});

}  // namespace shapedp
