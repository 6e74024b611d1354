#pragma once

#include <vector>

#include "shapedp/assignment.hpp"
#include "shapedp/contour.hpp"

namespace shapedp {

/// p -> scale * R(rotation) * p + translation, rotation in (-pi, pi].
struct SimilarityTransform {
    double rotation = 0.0;
    double scale = 1.0;
    Point2 translation{};

    Point2 apply(Point2 p) const;
    /// (*this) after `first`.
    SimilarityTransform compose(const SimilarityTransform& first) const;
};

struct ProcrustesFit {
    SimilarityTransform transform;
    Contour aligned;  // the full source contour under `transform`
    double residual;  // RMS distance over the corresponding pairs
};

/// Closed-form least-squares similarity transform taking the source points
/// onto their target partners. Pairs are (target index, source index).
ProcrustesFit procrustes(const Contour& target, const Contour& source, const Correspondence& corr);

Contour transform_contour(const Contour& contour, const SimilarityTransform& t);

}  // namespace shapedp
