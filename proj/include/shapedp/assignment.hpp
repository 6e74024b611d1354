#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace shapedp {

/// Dense row-major real matrix.
class CostMatrix {
public:
    CostMatrix() = default;
    CostMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

struct Correspondence {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (row, col), sorted by row
    double total_cost = 0.0;                                 // summed in row order
};

/// Minimum-cost one-to-one assignment (Hungarian method with potentials).
/// A non-square matrix is padded with `dummy_cost` entries; pairs touching a
/// dummy row or column are dropped from the result.
Correspondence assign(const CostMatrix& cost, double dummy_cost = 0.25);

}  // namespace shapedp
