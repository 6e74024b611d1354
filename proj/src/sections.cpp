#include "shapedp/sections.hpp"

#include <algorithm>
#include <cmath>

#include "shapedp/error.hpp"

namespace shapedp {

const char* to_string(SectionKind kind) {
    switch (kind) {
        case SectionKind::Line: return "line";
        case SectionKind::Convex: return "convex";
        case SectionKind::Concave: return "concave";
    }
    return "?";
}

void SectionConfig::validate() const {
    if (window < 1) throw Error(ErrorCode::InvalidArgument, "curvature window must be >= 1");
    if (!(line_eps >= 0.0)) throw Error(ErrorCode::InvalidArgument, "line epsilon must be non-negative");
}

RunSegmentation segment_run(std::span<const Point2> points, Orientation orientation, const SectionConfig& cfg) {
    cfg.validate();
    const std::size_t n = points.size();
    RunSegmentation seg;
    seg.labels.assign(n, SectionKind::Line);
    if (n < 3) return seg;

    std::vector<double> turn(n, 0.0);
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const Point2 e1 = points[j] - points[j - 1];
        const Point2 e2 = points[j + 1] - points[j];
        const double len = norm(e1) * norm(e2);
        turn[j] = len > 0.0 ? cross(e1, e2) / len : 0.0;
    }

    const std::size_t half = cfg.window / 2;
    const double outward = orientation == Orientation::Clockwise ? 1.0 : -1.0;
    for (std::size_t j = 1; j + 1 < n; ++j) {
        const std::size_t lo = std::max<std::size_t>(1, j > half ? j - half : 1);
        const std::size_t hi = std::min(n - 2, j + half);
        double sum = 0.0;
        for (std::size_t k = lo; k <= hi; ++k) sum += turn[k];
        const double smoothed = sum / static_cast<double>(hi - lo + 1);
        if (std::abs(smoothed) < cfg.line_eps) {
            seg.labels[j] = SectionKind::Line;
        } else {
            seg.labels[j] = smoothed * outward > 0.0 ? SectionKind::Convex : SectionKind::Concave;
        }
    }
    seg.labels[0] = seg.labels[1];
    seg.labels[n - 1] = seg.labels[n - 2];

    for (std::size_t j = 1; j < n; ++j) {
        if (seg.labels[j] != seg.labels[j - 1]) seg.splits.push_back(j);
    }
    return seg;
}

std::vector<std::size_t> detect_inflexions(std::span<const Point2> points, Orientation orientation,
                                           const SectionConfig& cfg) {
    return segment_run(points, orientation, cfg).splits;
}

namespace {

double fold_half_turn(double a) {
    if (a < 0.0) a += kPi;
    if (a >= kPi) a -= kPi;
    return a < 0.0 ? 0.0 : a;
}

Section measure(std::span<const Point2> pts, SectionKind kind, const SurroundingCircle& circle) {
    Section s;
    s.kind = kind;
    s.points.assign(pts.begin(), pts.end());
    s.first = pts.front();
    s.last = pts.back();
    s.d1 = distance(s.first, circle.center) / circle.radius;
    s.d2 = distance(s.last, circle.center) / circle.radius;
    if (pts.size() < 2) {
        s.kind = SectionKind::Line;
        return s;
    }

    Point2 chord_end = s.last;
    if (distance(s.first, chord_end) == 0.0) {
        // Closed loop: span the chord to the farthest point instead.
        double best = 0.0;
        for (const auto& p : pts) {
            const double d = distance(s.first, p);
            if (d > best) {
                best = d;
                chord_end = p;
            }
        }
        if (!(best > 0.0)) throw Error(ErrorCode::ZeroChord, "section points all coincide");
    }

    const Point2 chord = chord_end - s.first;
    const double chord_len = norm(chord);
    s.alpha = fold_half_turn(std::atan2(chord.y, chord.x));
    if (s.kind == SectionKind::Line) return s;

    double sagitta = 0.0;
    for (const auto& p : pts) sagitta = std::max(sagitta, std::abs(cross(chord, p - s.first)) / chord_len);
    s.degree = sagitta / chord_len;
    s.area = std::abs(signed_area(pts)) / (kPi * circle.radius * circle.radius);
    return s;
}

}  // namespace

std::vector<Section> make_sections(std::span<const Point2> points, const SurroundingCircle& circle,
                                   Orientation orientation, const SectionConfig& cfg) {
    if (points.empty()) return {};
    const auto seg = segment_run(points, orientation, cfg);

    std::vector<Section> out;
    std::size_t start = 0;
    auto emit = [&](std::size_t end) {
        out.push_back(measure(points.subspan(start, end - start + 1), seg.labels[start], circle));
        start = end;
    };
    for (std::size_t split : seg.splits) emit(split);
    emit(points.size() - 1);
    return out;
}

}  // namespace shapedp
