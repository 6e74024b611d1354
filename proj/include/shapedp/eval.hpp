#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shapedp/config.hpp"
#include "shapedp/retrieval.hpp"
#include "shapedp/synthetic.hpp"

namespace shapedp {

/// Canonical-frame signatures for every shape, optionally keeping the
/// canonical outline for pairwise queries.
Index build_index(std::span<const LabeledContour> shapes, const RunConfig& cfg, bool keep_outline = false);

/// Re-encodes the stored canonical outlines under `cfg`. Throws
/// InvalidArgument when a record has no outline.
Index reencode_index(const Index& index, const RunConfig& cfg);

struct SweepPoint {
    unsigned angle_bins = 0;
    BullseyeReport report;
};

/// Rebuilds the index once per angle-bin count and scores each with the
/// bulls-eye test. `depth` 0 means twice the class size.
std::vector<SweepPoint> angle_bin_sweep(std::span<const LabeledContour> shapes, const RunConfig& base,
                                        std::span<const unsigned> bins, std::size_t depth = 0,
                                        const QueryOptions& opt = {});
/// Same sweep over an index that stores its outlines.
std::vector<SweepPoint> angle_bin_sweep(const Index& index, const RunConfig& base, std::span<const unsigned> bins,
                                        std::size_t depth = 0, const QueryOptions& opt = {});

}  // namespace shapedp
