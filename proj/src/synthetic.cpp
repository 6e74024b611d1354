#include "shapedp/synthetic.hpp"

#include <cmath>
#include <cstdio>

#include "shapedp/error.hpp"

namespace shapedp {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

namespace {

std::vector<Point2> star(SplitMix64& rng, std::size_t arms) {
    std::vector<Point2> v;
    const double inner = rng.uniform(0.35, 0.55);
    const double stretch = rng.uniform(1.3, 1.7);
    for (std::size_t k = 0; k < 2 * arms; ++k) {
        const double t = kPi * static_cast<double>(k) / static_cast<double>(arms);
        double r = (k % 2 == 0) ? 1.0 : inner;
        if (k == 0) r = 1.35;  // one long arm breaks the symmetry
        v.push_back({stretch * r * std::cos(t), r * std::sin(t)});
    }
    return v;
}

std::vector<Point2> egg(SplitMix64& rng) {
    std::vector<Point2> v;
    const double aspect = rng.uniform(1.6, 2.2);
    const double taper = rng.uniform(0.2, 0.35);
    for (std::size_t k = 0; k < 160; ++k) {
        const double t = kTwoPi * static_cast<double>(k) / 160.0;
        v.push_back({aspect * std::cos(t), std::sin(t) * (1.0 + taper * std::cos(t))});
    }
    return v;
}

std::vector<Point2> notched_rectangle(SplitMix64& rng) {
    const double w = rng.uniform(1.0, 1.3);
    const double h = rng.uniform(0.45, 0.6);
    const double notch_at = rng.uniform(0.2, 0.5);
    const double notch_w = rng.uniform(0.25, 0.35);
    const double notch_d = rng.uniform(0.3, 0.45) * h * 2.0;
    // Clockwise on screen: along the top edge (y = -h) left to right.
    return {{-w, -h},
            {notch_at - notch_w, -h},
            {notch_at - notch_w, -h + notch_d},
            {notch_at + notch_w, -h + notch_d},
            {notch_at + notch_w, -h},
            {w, -h},
            {w, h},
            {-w, h}};
}

std::vector<Point2> blob(SplitMix64& rng) {
    double amp[6] = {};
    double phase[6] = {};
    for (int k = 2; k < 6; ++k) {
        amp[k] = rng.uniform(0.05, 0.3) / static_cast<double>(k - 1);
        phase[k] = rng.uniform(0.0, kTwoPi);
    }
    const double stretch = rng.uniform(1.3, 1.6);
    std::vector<Point2> v;
    for (std::size_t i = 0; i < 180; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / 180.0;
        double r = 1.0;
        for (int k = 2; k < 6; ++k) r += amp[k] * std::cos(k * t + phase[k]);
        v.push_back({stretch * r * std::cos(t), r * std::sin(t)});
    }
    return v;
}

std::vector<Point2> base_shape(std::size_t cls, std::uint64_t seed) {
    SplitMix64 rng(seed * 0x100000001b3ULL + cls * 0x9e37ULL + 17);
    switch (cls % 4) {
        case 0: return star(rng, 5 + (cls / 4) % 3);
        case 1: return egg(rng);
        case 2: return notched_rectangle(rng);
        default: return blob(rng);
    }
}

}  // namespace

std::vector<LabeledContour> gen_synthetic(const SyntheticParams& params) {
    if (params.class_count < 1 || params.per_class < 1) {
        throw Error(ErrorCode::InvalidArgument, "class_count and per_class must be >= 1");
    }
    if (!(params.noise_level >= 0.0)) throw Error(ErrorCode::InvalidArgument, "noise level must be non-negative");

    std::vector<LabeledContour> out;
    SplitMix64 rng(params.seed);
    for (std::size_t c = 0; c < params.class_count; ++c) {
        Contour base(base_shape(c, params.seed));
        if (base.orientation() != Orientation::Clockwise) base = base.reversed();
        const Contour sampled = resample(base, params.points);
        const Point2 center = centroid(sampled.points());
        double radius = 0.0;
        for (const auto& p : sampled.points()) radius = std::max(radius, distance(p, center));

        char label[32];
        std::snprintf(label, sizeof label, "class%02zu", c);
        for (std::size_t i = 0; i < params.per_class; ++i) {
            const double angle = rng.uniform(0.0, kTwoPi);
            const double scale = rng.uniform(0.5, 2.0);
            const Point2 shift{rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0)};
            const double cs = std::cos(angle), sn = std::sin(angle);

            std::vector<Point2> pts;
            pts.reserve(sampled.size());
            for (const auto& p : sampled.points()) {
                Point2 q = p;
                if (params.noise_level > 0.0) {
                    const Point2 d = p - center;
                    const double len = norm(d);
                    const double jitter = rng.uniform(-1.0, 1.0) * params.noise_level * radius;
                    if (len > 0.0) q = p + (jitter / len) * d;
                }
                q = q - center;
                pts.push_back({scale * (cs * q.x - sn * q.y) + shift.x, scale * (sn * q.x + cs * q.y) + shift.y});
            }
            char id[48];
            std::snprintf(id, sizeof id, "%s_%03zu", label, i);
            out.push_back({id, label, Contour(std::move(pts))});
        }
    }
    return out;
}

}  // namespace shapedp
