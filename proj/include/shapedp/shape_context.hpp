#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shapedp/assignment.hpp"
#include "shapedp/contour.hpp"
#include "shapedp/procrustes.hpp"

namespace shapedp {

/// Log-polar bin layout. Radii are fractions of the mean pairwise distance.
struct ScConfig {
    std::size_t radial_bins = 5;
    std::size_t angular_bins = 12;
    double r_inner = 0.125;
    double r_outer = 2.0;
    double dummy_cost = 0.25;  // padding cost when point counts differ

    std::size_t bin_count() const { return radial_bins * angular_bins; }
    void validate() const;
};

/// Bin k = radial * angular_bins + angular.
struct ScHistogram {
    std::vector<unsigned> counts;
    std::vector<double> norm;
};

std::vector<ScHistogram> compute_histograms(std::span<const Point2> points, const ScConfig& cfg);
inline std::vector<ScHistogram> compute_histograms(const Contour& contour, const ScConfig& cfg) {
    return compute_histograms(contour.points(), cfg);
}

/// Half the chi-square statistic between normalized histograms. Bins that
/// are empty in both contribute nothing.
double chi2_cost(const ScHistogram& h, const ScHistogram& g);

CostMatrix cost_matrix(std::span<const ScHistogram> a, std::span<const ScHistogram> b);

struct PairAlignment {
    Contour aligned;                // b mapped onto a's frame
    Correspondence correspondence;  // (index in a, index in b)
    SimilarityTransform transform;  // original b -> aligned
    double residual = 0.0;          // RMS over matched pairs
    double initial_residual = 0.0;  // same, before the refinement round
    bool refined = false;           // true when the refinement round was kept
};

/// Histograms, chi-square costs, assignment and Procrustes fit of b onto a
/// (starting from the best of angular_bins whole-bin rotations of b),
/// followed by one refinement round on the aligned b. The refined fit is
/// kept only if it does not increase the residual.
PairAlignment align_pair(const Contour& a, const Contour& b, const ScConfig& cfg);

}  // namespace shapedp
