#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "shapedp/contour.hpp"

namespace shapedp {

struct LabeledContour {
    std::string id;
    std::string label;
    Contour contour;
};

struct SyntheticParams {
    std::size_t class_count = 5;
    std::size_t per_class = 8;
    double noise_level = 0.0;     // radial jitter bound as a fraction of R
    std::uint64_t seed = 1;
    std::size_t points = 256;     // samples per outline
};

/// Base outlines (stars, eggs, notched rectangles, smoothed radial blobs),
/// each instance under a random similarity transform plus radial noise.
std::vector<LabeledContour> gen_synthetic(const SyntheticParams& params);

/// Small deterministic generator; the same seed gives the same stream on
/// every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    double uniform();                      // [0, 1)
    double uniform(double lo, double hi);  // [lo, hi)

private:
    std::uint64_t state_;
};

}  // namespace shapedp
