#include "shapedp/encoding.hpp"

#include <algorithm>
#include <cmath>

#include "shapedp/error.hpp"

namespace shapedp {

void QuantizerConfig::validate() const {
    if (!(area_threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "area threshold must be positive");
    if (!(dist_edge_low > 0.0 && dist_edge_low < dist_edge_high && dist_edge_high < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "distance edges must satisfy 0 < low < high < 1");
    }
    if (angle_bins < 2) throw Error(ErrorCode::InvalidArgument, "angle bins must be >= 2");
    if (!(degree_threshold > 0.0)) throw Error(ErrorCode::InvalidArgument, "degree threshold must be positive");
}

void EncoderConfig::validate() const {
    if (resample_n < 3) throw Error(ErrorCode::InvalidArgument, "resample_n must be >= 3");
    arp.validate();
    sections.validate();
    quantizer.validate();
}

namespace {

unsigned distance_rank(double d, const QuantizerConfig& q) {
    if (d < q.dist_edge_low) return 1;
    if (d < q.dist_edge_high) return 2;
    return 3;
}

}  // namespace

std::array<Token, kGroupSize> quantize_section(const Section& s, const QuantizerConfig& q) {
    const bool line = s.kind == SectionKind::Line;
    const unsigned k = q.angle_bins;
    const auto angle_bin = std::min(static_cast<unsigned>(std::floor(s.alpha * k / kPi)) + 1, k);
    return {
        (line || s.area < q.area_threshold) ? tok::S : tok::L,
        Token{Family::Dist1, distance_rank(s.d1, q)},
        Token{Family::Dist2, distance_rank(s.d2, q)},
        tok::A(std::max(angle_bin, 1u)),
        (line || s.degree < q.degree_threshold) ? tok::D1 : tok::D2,
    };
}

EncodingTrace encode_shape_traced(const Contour& contour, const EncoderConfig& cfg) {
    cfg.validate();
    EncodingTrace trace;
    trace.circle = surrounding_circle(contour, cfg.arp.center);
    trace.slices = partition_contour(contour, trace.circle, cfg.arp);

    std::vector<Token> tokens;
    for (const auto& slice : trace.slices) {
        for (std::size_t r = 0; r < slice.runs.size(); ++r) {
            const auto pts = run_points(contour, slice.runs[r]);
            for (auto& section : make_sections(pts, trace.circle, contour.orientation(), cfg.sections)) {
                const auto group = quantize_section(section, cfg.quantizer);
                tokens.insert(tokens.end(), group.begin(), group.end());
                trace.entries.push_back({slice.sector, r, std::move(section), group});
            }
        }
    }
    trace.symbols = SymbolString(std::move(tokens));
    return trace;
}

SymbolString encode_shape(const Contour& contour, const EncoderConfig& cfg) {
    return encode_shape_traced(contour, cfg).symbols;
}

Contour canonical_frame(const Contour& contour, std::size_t resample_n) {
    const Contour sampled = resample(contour, resample_n);
    const auto normalized = normalize(sampled).contour;
    const auto pts = normalized.points();

    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (const auto& p : pts) {
        sxx += p.x * p.x;
        syy += p.y * p.y;
        sxy += p.x * p.y;
    }
    // Major axis of the second-moment tensor onto +x.
    double angle = -0.5 * std::atan2(2.0 * sxy, sxx - syy);
    auto rotate_all = [&](double a) {
        const double c = std::cos(a), s = std::sin(a);
        std::vector<Point2> out;
        out.reserve(pts.size());
        for (const auto& p : pts) out.push_back({c * p.x - s * p.y, s * p.x + c * p.y});
        return out;
    };
    auto rotated = rotate_all(angle);
    double skew = 0.0;
    for (const auto& p : rotated) skew += p.x * p.x * p.x;
    if (skew < 0.0) {
        angle += kPi;
        rotated = rotate_all(angle);
    }

    Contour out(std::move(rotated));
    if (out.orientation() != Orientation::Clockwise) out = out.reversed();
    std::size_t start = 0;
    const auto outline = out.points();
    for (std::size_t i = 1; i < outline.size(); ++i) {
        if (outline[i].x > outline[start].x) start = i;
    }
    return out.rotated_start(start);
}

}  // namespace shapedp
