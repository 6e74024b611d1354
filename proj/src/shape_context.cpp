#include "shapedp/shape_context.hpp"

#include <algorithm>
#include <cmath>

#include "shapedp/error.hpp"

namespace shapedp {

void ScConfig::validate() const {
    if (radial_bins < 1 || angular_bins < 1) throw Error(ErrorCode::InvalidArgument, "shape context needs >= 1 bin per axis");
    if (!(r_inner > 0.0 && r_inner < r_outer)) throw Error(ErrorCode::InvalidArgument, "shape context needs 0 < r_inner < r_outer");
    if (!(dummy_cost >= 0.0)) throw Error(ErrorCode::InvalidArgument, "dummy cost must be non-negative");
}

std::vector<ScHistogram> compute_histograms(std::span<const Point2> points, const ScConfig& cfg) {
    cfg.validate();
    const std::size_t n = points.size();
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "shape context needs at least 2 points");

    double mean_dist = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) mean_dist += distance(points[i], points[j]);
    }
    mean_dist /= static_cast<double>(n * (n - 1) / 2);
    if (!(mean_dist > 0.0)) mean_dist = 1.0;

    // Inner edges only; a distance below edges[0] lands in ring 0 and one
    // beyond the last edge in the outermost ring.
    const auto rings = cfg.radial_bins;
    std::vector<double> edges;
    const double ratio = std::log(cfg.r_outer / cfg.r_inner);
    for (std::size_t k = 1; k < rings; ++k) {
        edges.push_back(cfg.r_inner * mean_dist * std::exp(ratio * static_cast<double>(k) / static_cast<double>(rings)));
    }
    const double angular = static_cast<double>(cfg.angular_bins);

    std::vector<ScHistogram> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& h = out[i];
        h.counts.assign(cfg.bin_count(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const Point2 d = points[j] - points[i];
            const double r = norm(d);
            const auto ring = static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), r) - edges.begin());
            auto wedge = static_cast<std::size_t>(std::floor(clockwise_angle(d) * angular / kTwoPi));
            wedge = std::min(wedge, cfg.angular_bins - 1);
            ++h.counts[ring * cfg.angular_bins + wedge];
        }
        h.norm.resize(h.counts.size());
        const double total = static_cast<double>(n - 1);
        for (std::size_t k = 0; k < h.counts.size(); ++k) h.norm[k] = h.counts[k] / total;
    }
    return out;
}

double chi2_cost(const ScHistogram& h, const ScHistogram& g) {
    if (h.norm.size() != g.norm.size()) {
        throw Error(ErrorCode::DimensionMismatch, "histograms have different bin counts");
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < h.norm.size(); ++k) {
        const double s = h.norm[k] + g.norm[k];
        if (s > 0.0) {
            const double d = h.norm[k] - g.norm[k];
            sum += d * d / s;
        }
    }
    // Disjoint histograms give exactly 1 in theory; rounding can overshoot.
    return std::min(1.0, 0.5 * sum);
}

CostMatrix cost_matrix(std::span<const ScHistogram> a, std::span<const ScHistogram> b) {
    CostMatrix c(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) c(i, j) = chi2_cost(a[i], b[j]);
    }
    return c;
}

PairAlignment align_pair(const Contour& a, const Contour& b, const ScConfig& cfg) {
    const auto ha = compute_histograms(a, cfg);

    // Global-frame histograms only tolerate small rotations, so the first
    // match starts from whichever whole-bin rotation of b matches best.
    const Point2 cb = centroid(b.points());
    SimilarityTransform pre;
    Contour start = b;
    Correspondence first_corr;
    for (std::size_t k = 0; k < cfg.angular_bins; ++k) {
        SimilarityTransform t;
        t.rotation = -kTwoPi * static_cast<double>(k) / static_cast<double>(cfg.angular_bins);
        const Point2 rc = SimilarityTransform{t.rotation, 1.0, {}}.apply(cb);
        t.translation = cb - rc;
        Contour candidate = k == 0 ? b : transform_contour(b, t);
        auto corr = assign(cost_matrix(ha, compute_histograms(candidate, cfg)), cfg.dummy_cost);
        if (k == 0 || corr.total_cost < first_corr.total_cost) {
            first_corr = std::move(corr);
            pre = t;
            start = std::move(candidate);
        }
    }
    auto first = procrustes(a, start, first_corr);
    first.transform = first.transform.compose(pre);

    const auto second_corr = assign(cost_matrix(ha, compute_histograms(first.aligned, cfg)), cfg.dummy_cost);
    auto second = procrustes(a, first.aligned, second_corr);

    if (second.residual <= first.residual) {
        return PairAlignment{std::move(second.aligned), second_corr, second.transform.compose(first.transform),
                             second.residual, first.residual, true};
    }
    return PairAlignment{std::move(first.aligned), first_corr, first.transform, first.residual, first.residual, false};
}

}  // namespace shapedp
