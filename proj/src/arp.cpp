#include "shapedp/arp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "shapedp/error.hpp"

namespace shapedp {

void ArpConfig::validate() const {
    if (rings < 1 || wedges < 1) throw Error(ErrorCode::InvalidArgument, "ARP needs at least one ring and one wedge");
    if (!std::isfinite(start_angle)) throw Error(ErrorCode::InvalidArgument, "ARP start angle must be finite");
}

namespace {

SurroundingCircle circle_from(Point2 a, Point2 b) { return {(a + b) / 2.0, distance(a, b) / 2.0}; }

SurroundingCircle circle_from(Point2 a, Point2 b, Point2 c) {
    const Point2 ab = b - a;
    const Point2 ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    if (std::abs(d) < 1e-300) {
        // Collinear: the widest pair spans the circle.
        auto best = circle_from(a, b);
        for (auto cand : {circle_from(a, c), circle_from(b, c)}) {
            if (cand.radius > best.radius) best = cand;
        }
        return best;
    }
    const double ab2 = dot(ab, ab);
    const double ac2 = dot(ac, ac);
    const Point2 off{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
    return {a + off, norm(off)};
}

bool contains(const SurroundingCircle& c, Point2 p) { return distance(c.center, p) <= c.radius * (1.0 + 1e-12) + 1e-300; }

SurroundingCircle finish(Point2 center, std::span<const Point2> points) {
    double r = 0.0;
    for (const auto& p : points) r = std::max(r, distance(center, p));
    if (!(r > 0.0)) throw Error(ErrorCode::ZeroExtent, "surrounding circle has zero radius");
    return {center, r * (1.0 + kCircleSlack)};
}

}  // namespace

SurroundingCircle minimal_enclosing_circle(std::span<const Point2> points) {
    if (points.empty()) throw Error(ErrorCode::ZeroExtent, "no points");
    std::vector<Point2> pts(points.begin(), points.end());
    std::mt19937 rng(0x5eed);
    std::shuffle(pts.begin(), pts.end(), rng);

    SurroundingCircle c{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (contains(c, pts[i])) continue;
        c = {pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (contains(c, pts[j])) continue;
            c = circle_from(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (!contains(c, pts[k])) c = circle_from(pts[i], pts[j], pts[k]);
            }
        }
    }
    return finish(c.center, points);
}

SurroundingCircle surrounding_circle(const Contour& contour, CircleCenter mode) {
    if (mode == CircleCenter::MinimalEnclosing) return minimal_enclosing_circle(contour.points());
    return finish(centroid(contour.points()), contour.points());
}

SectorId sector_of_point(Point2 p, const SurroundingCircle& circle, const ArpConfig& cfg) {
    const double dist = distance(p, circle.center);
    if (!(dist <= circle.radius * (1.0 + kCircleSlack))) {
        throw Error(ErrorCode::OutsideCircle, "point lies outside the surrounding circle");
    }
    SectorId id;
    if (dist > 0.0) {
        const double rings = static_cast<double>(cfg.rings);
        id.ring = std::min(static_cast<std::size_t>(std::floor(dist * rings / circle.radius)), cfg.rings - 1);

        double phi = clockwise_angle(p - circle.center) - cfg.start_angle;
        phi = std::fmod(phi, kTwoPi);
        if (phi < 0.0) phi += kTwoPi;
        const double wedges = static_cast<double>(cfg.wedges);
        id.wedge = std::min(static_cast<std::size_t>(std::floor(phi * wedges / kTwoPi)), cfg.wedges - 1);
    }
    id.ordinal = id.ring * cfg.wedges + id.wedge + 1;
    return id;
}

std::vector<SectorSlice> partition_contour(const Contour& contour, const SurroundingCircle& circle,
                                           const ArpConfig& cfg) {
    cfg.validate();
    const std::size_t n = contour.size();
    std::vector<SectorId> ids;
    ids.reserve(n);
    for (const auto& p : contour.points()) ids.push_back(sector_of_point(p, circle, cfg));

    // Begin at a sector change so a run across the index wrap stays whole.
    std::size_t begin = 0;
    if (ids.front() == ids.back()) {
        for (std::size_t i = 1; i < n; ++i) {
            if (!(ids[i] == ids[i - 1])) {
                begin = i;
                break;
            }
        }
    }

    std::map<std::size_t, SectorSlice> by_ordinal;
    std::size_t k = 0;
    while (k < n) {
        const std::size_t start = (begin + k) % n;
        std::size_t len = 1;
        while (k + len < n && ids[(begin + k + len) % n] == ids[start]) ++len;
        auto& slice = by_ordinal[ids[start].ordinal];
        slice.sector = ids[start];
        slice.runs.push_back({start, len});
        k += len;
    }

    std::vector<SectorSlice> out;
    out.reserve(by_ordinal.size());
    for (auto& [ordinal, slice] : by_ordinal) {
        std::sort(slice.runs.begin(), slice.runs.end(), [](const Run& a, const Run& b) { return a.start < b.start; });
        out.push_back(std::move(slice));
    }
    return out;
}

std::vector<Point2> run_points(const Contour& contour, const Run& run) {
    std::vector<Point2> out;
    out.reserve(run.length);
    for (std::size_t k = 0; k < run.length; ++k) out.push_back(contour[(run.start + k) % contour.size()]);
    return out;
}

}  // namespace shapedp
