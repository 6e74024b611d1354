#include "shapedp/contour.hpp"

#include <algorithm>
#include <cmath>

#include "shapedp/error.hpp"

namespace shapedp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::EmptyMask: return "EmptyMask";
        case ErrorCode::DegenerateRegion: return "DegenerateRegion";
        case ErrorCode::ZeroExtent: return "ZeroExtent";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::DegenerateCorrespondence: return "DegenerateCorrespondence";
        case ErrorCode::OutsideCircle: return "OutsideCircle";
        case ErrorCode::ZeroChord: return "ZeroChord";
        case ErrorCode::InconsistentMatrix: return "InconsistentMatrix";
        case ErrorCode::FingerprintMismatch: return "FingerprintMismatch";
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::EmptyIndex: return "EmptyIndex";
        case ErrorCode::UnlabeledRecord: return "UnlabeledRecord";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

double signed_area(std::span<const Point2> points) {
    const std::size_t n = points.size();
    if (n < 3) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += cross(points[i], points[(i + 1) % n]);
    return 0.5 * sum;
}

double closed_perimeter(std::span<const Point2> points) {
    const std::size_t n = points.size();
    if (n < 2) return 0.0;
    double len = 0.0;
    for (std::size_t i = 0; i < n; ++i) len += distance(points[i], points[(i + 1) % n]);
    return len;
}

Point2 centroid(std::span<const Point2> points) {
    Point2 c{};
    for (const auto& p : points) c = c + p;
    return points.empty() ? c : c / static_cast<double>(points.size());
}

namespace {

// Duplicate tolerance scales with the outline extent (1e-12 in normalized units).
double duplicate_tolerance(const std::vector<Point2>& pts) {
    double extent = 0.0;
    for (const auto& p : pts) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
    return 1e-12 * std::max(1.0, extent);
}

}  // namespace

Contour::Contour(std::vector<Point2> points) {
    for (const auto& p : points) {
        if (!is_finite(p)) throw Error(ErrorCode::InvalidArgument, "contour point is not finite");
    }
    const double tol = duplicate_tolerance(points);
    auto same = [tol](Point2 a, Point2 b) { return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol; };

    points_.reserve(points.size());
    for (const auto& p : points) {
        if (points_.empty() || !same(points_.back(), p)) points_.push_back(p);
    }
    while (points_.size() > 1 && same(points_.back(), points_.front())) points_.pop_back();

    if (points_.size() < 3) {
        throw Error(ErrorCode::InvalidArgument,
                    "contour needs at least 3 distinct points, got " + std::to_string(points_.size()));
    }
    orientation_ = shapedp::signed_area(points_) >= 0.0 ? Orientation::Clockwise : Orientation::CounterClockwise;
}

Contour Contour::reversed() const {
    std::vector<Point2> pts;
    pts.reserve(points_.size());
    pts.push_back(points_.front());
    for (std::size_t i = points_.size() - 1; i > 0; --i) pts.push_back(points_[i]);
    return Contour(std::move(pts));
}

Contour Contour::rotated_start(std::size_t start) const {
    std::vector<Point2> pts(points_.begin(), points_.end());
    std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(start % pts.size()), pts.end());
    return Contour(std::move(pts));
}

Contour resample(const Contour& contour, std::size_t n) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "resample needs n >= 3");
    const auto pts = contour.points();
    const std::size_t m = pts.size();

    std::vector<double> cum(m + 1, 0.0);
    for (std::size_t i = 0; i < m; ++i) cum[i + 1] = cum[i] + distance(pts[i], pts[(i + 1) % m]);
    const double total = cum[m];

    std::vector<Point2> out;
    out.reserve(n);
    std::size_t seg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = total * static_cast<double>(k) / static_cast<double>(n);
        while (seg + 1 < m && cum[seg + 1] <= t) ++seg;
        const double len = cum[seg + 1] - cum[seg];
        const double u = len > 0.0 ? (t - cum[seg]) / len : 0.0;
        const Point2 a = pts[seg];
        const Point2 b = pts[(seg + 1) % m];
        out.push_back(u == 0.0 ? a : a + u * (b - a));
    }
    return Contour(std::move(out));
}

NormalizedContour normalize(const Contour& contour) {
    const auto pts = contour.points();
    const Point2 c = centroid(pts);
    double mean_dist = 0.0;
    for (const auto& p : pts) mean_dist += distance(p, c);
    mean_dist /= static_cast<double>(pts.size());
    if (!(mean_dist > 0.0)) throw Error(ErrorCode::ZeroExtent, "all contour points coincide");

    std::vector<Point2> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back((p - c) / mean_dist);
    return {Contour(std::move(out)), NormalizationRecord{c, mean_dist}};
}

}  // namespace shapedp
