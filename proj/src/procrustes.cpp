#include "shapedp/procrustes.hpp"

#include <cmath>

#include "shapedp/error.hpp"

namespace shapedp {

namespace {

double wrap_angle(double a) {
    a = std::remainder(a, kTwoPi);
    if (a <= -kPi) a += kTwoPi;
    return a;
}

Point2 rotate(Point2 p, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

}  // namespace

Point2 SimilarityTransform::apply(Point2 p) const { return scale * rotate(p, rotation) + translation; }

SimilarityTransform SimilarityTransform::compose(const SimilarityTransform& first) const {
    return {wrap_angle(rotation + first.rotation), scale * first.scale, apply(first.translation)};
}

Contour transform_contour(const Contour& contour, const SimilarityTransform& t) {
    std::vector<Point2> pts;
    pts.reserve(contour.size());
    for (const auto& p : contour.points()) pts.push_back(t.apply(p));
    return Contour(std::move(pts));
}

ProcrustesFit procrustes(const Contour& target, const Contour& source, const Correspondence& corr) {
    if (corr.pairs.size() < 2) throw Error(ErrorCode::DegenerateCorrespondence, "procrustes needs at least 2 pairs");
    for (const auto& [i, j] : corr.pairs) {
        if (i >= target.size() || j >= source.size()) {
            throw Error(ErrorCode::InvalidArgument, "correspondence index out of range");
        }
    }

    const auto count = static_cast<double>(corr.pairs.size());
    Point2 mean_t{}, mean_s{};
    for (const auto& [i, j] : corr.pairs) {
        mean_t = mean_t + target[i];
        mean_s = mean_s + source[j];
    }
    mean_t = mean_t / count;
    mean_s = mean_s / count;

    // With centred q (source) and p (target): angle = atan2(sum q x p, sum q . p),
    // scale = |(sum q . p, sum q x p)| / sum |q|^2.
    double sxx = 0.0, sxy = 0.0, var_s = 0.0;
    for (const auto& [i, j] : corr.pairs) {
        const Point2 q = source[j] - mean_s;
        const Point2 p = target[i] - mean_t;
        sxx += dot(q, p);
        sxy += cross(q, p);
        var_s += dot(q, q);
    }
    if (!(var_s > 0.0)) throw Error(ErrorCode::DegenerateCorrespondence, "matched source points all coincide");

    SimilarityTransform t;
    t.rotation = wrap_angle(std::atan2(sxy, sxx));
    t.scale = std::hypot(sxx, sxy) / var_s;
    t.translation = mean_t - t.scale * rotate(mean_s, t.rotation);
    if (!(t.scale > 0.0)) throw Error(ErrorCode::DegenerateCorrespondence, "fitted scale is not positive");

    double sq = 0.0;
    for (const auto& [i, j] : corr.pairs) {
        const Point2 d = t.apply(source[j]) - target[i];
        sq += dot(d, d);
    }
    return {t, transform_contour(source, t), std::sqrt(sq / count)};
}

}  // namespace shapedp
