#pragma once

#include <cstddef>
#include <vector>

#include "shapedp/contour.hpp"

namespace shapedp {

/// Row-major boolean image; true marks foreground.
class BinaryMask {
public:
    BinaryMask(std::size_t width, std::size_t height);
    BinaryMask(std::size_t width, std::size_t height, std::vector<bool> bits);

    std::size_t width() const noexcept { return width_; }
    std::size_t height() const noexcept { return height_; }

    bool at(long x, long y) const {
        if (x < 0 || y < 0 || x >= static_cast<long>(width_) || y >= static_cast<long>(height_)) return false;
        return bits_[static_cast<std::size_t>(y) * width_ + static_cast<std::size_t>(x)];
    }
    void set(std::size_t x, std::size_t y, bool v = true) { bits_[y * width_ + x] = v; }
    std::size_t foreground_count() const;

private:
    std::size_t width_;
    std::size_t height_;
    std::vector<bool> bits_;
};

/// Outer boundary of the largest 4-connected foreground region, as pixel
/// centres in clockwise (image frame) order. Moore-neighbour tracing with
/// Jacob's stopping criterion, starting from the region's first pixel in
/// raster order.
Contour trace_boundary(const BinaryMask& mask);

}  // namespace shapedp
