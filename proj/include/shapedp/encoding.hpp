#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "shapedp/arp.hpp"
#include "shapedp/sections.hpp"
#include "shapedp/tokens.hpp"

namespace shapedp {

struct QuantizerConfig {
    double area_threshold = 0.01;       // on area / (pi R^2)
    double dist_edge_low = 1.0 / 3.0;   // on d / R
    double dist_edge_high = 2.0 / 3.0;
    unsigned angle_bins = 6;
    double degree_threshold = 0.25;

    void validate() const;
};

std::array<Token, kGroupSize> quantize_section(const Section& s, const QuantizerConfig& q);

struct EncoderConfig {
    std::size_t resample_n = 200;
    ArpConfig arp;
    SectionConfig sections;
    QuantizerConfig quantizer;

    void validate() const;
};

/// Everything the encoder saw, for inspection.
struct EncodingTrace {
    SurroundingCircle circle;
    std::vector<SectorSlice> slices;
    struct Entry {
        SectorId sector;
        std::size_t run = 0;  // index within the slice
        Section section;
        std::array<Token, kGroupSize> tokens;
    };
    std::vector<Entry> entries;
    SymbolString symbols;
};

/// Circle, partition, sections and quantization. Quintuples are emitted in
/// ascending sector ordinal, then run order, then contour order.
EncodingTrace encode_shape_traced(const Contour& contour, const EncoderConfig& cfg);
SymbolString encode_shape(const Contour& contour, const EncoderConfig& cfg);

/// Pose-normalized copy used for database encoding: resampled to
/// `resample_n`, centred, unit mean radius, principal axis on +x with the
/// heavier third-moment side toward +x, clockwise, and starting at the point
/// of largest x.
Contour canonical_frame(const Contour& contour, std::size_t resample_n);

inline SymbolString encode_canonical(const Contour& contour, const EncoderConfig& cfg) {
    return encode_shape(canonical_frame(contour, cfg.resample_n), cfg);
}

}  // namespace shapedp
