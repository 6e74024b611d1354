#include "shapedp/mask.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <unordered_set>

#include "shapedp/error.hpp"

namespace shapedp {

BinaryMask::BinaryMask(std::size_t width, std::size_t height)
    : width_(width), height_(height), bits_(width * height, false) {}

BinaryMask::BinaryMask(std::size_t width, std::size_t height, std::vector<bool> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
    if (bits_.size() != width_ * height_) {
        throw Error(ErrorCode::InvalidArgument, "mask bit count does not match width x height");
    }
}

std::size_t BinaryMask::foreground_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

namespace {

struct Pixel {
    long x;
    long y;
    friend bool operator==(Pixel, Pixel) = default;
};

// Clockwise on screen (y down), starting west.
constexpr std::array<Pixel, 8> kRing = {{{-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}}};

int ring_index(Pixel offset) {
    for (int k = 0; k < 8; ++k) {
        if (kRing[k] == offset) return k;
    }
    return -1;
}

// Labels of the largest 4-connected component; the earliest one in raster
// order wins ties.
std::vector<char> largest_component(const BinaryMask& mask) {
    const auto w = static_cast<long>(mask.width());
    const auto h = static_cast<long>(mask.height());
    std::vector<int> label(mask.width() * mask.height(), -1);
    int best = -1;
    std::size_t best_size = 0;
    int next = 0;
    std::queue<Pixel> queue;
    for (long y = 0; y < h; ++y) {
        for (long x = 0; x < w; ++x) {
            const auto idx = static_cast<std::size_t>(y * w + x);
            if (!mask.at(x, y) || label[idx] >= 0) continue;
            std::size_t size = 0;
            label[idx] = next;
            queue.push({x, y});
            while (!queue.empty()) {
                const Pixel p = queue.front();
                queue.pop();
                ++size;
                for (Pixel d : {Pixel{1, 0}, Pixel{-1, 0}, Pixel{0, 1}, Pixel{0, -1}}) {
                    const Pixel q{p.x + d.x, p.y + d.y};
                    if (!mask.at(q.x, q.y)) continue;
                    const auto qi = static_cast<std::size_t>(q.y * w + q.x);
                    if (label[qi] < 0) {
                        label[qi] = next;
                        queue.push(q);
                    }
                }
            }
            if (size > best_size) {
                best_size = size;
                best = next;
            }
            ++next;
        }
    }
    std::vector<char> keep(label.size(), 0);
    for (std::size_t i = 0; i < label.size(); ++i) keep[i] = label[i] == best ? 1 : 0;
    return keep;
}

}  // namespace

Contour trace_boundary(const BinaryMask& mask) {
    if (mask.foreground_count() == 0) throw Error(ErrorCode::EmptyMask, "mask has no foreground pixel");

    const auto w = static_cast<long>(mask.width());
    const auto h = static_cast<long>(mask.height());
    const auto region = largest_component(mask);
    auto inside = [&](Pixel p) {
        return p.x >= 0 && p.y >= 0 && p.x < w && p.y < h && region[static_cast<std::size_t>(p.y * w + p.x)];
    };

    Pixel start{0, 0};
    for (long i = 0; i < w * h; ++i) {
        if (region[static_cast<std::size_t>(i)]) {
            start = {i % w, i / w};
            break;
        }
    }
    // The raster-first pixel always has background to its west.
    const Pixel start_back{start.x - 1, start.y};

    std::vector<Pixel> boundary{start};
    std::unordered_set<long> seen_states;
    auto state_key = [w](Pixel p, int dir) { return ((p.y + 1) * (w + 2) + (p.x + 1)) * 8 + dir; };

    Pixel cur = start;
    int back_dir = 0;
    seen_states.insert(state_key(cur, back_dir));
    const std::size_t limit = 8 * mask.foreground_count() + 16;
    for (std::size_t step = 0; step < limit; ++step) {
        int found = -1;
        for (int k = 1; k <= 8; ++k) {
            const int d = (back_dir + k) % 8;
            if (inside({cur.x + kRing[d].x, cur.y + kRing[d].y})) {
                found = d;
                break;
            }
        }
        if (found < 0) break;  // isolated pixel

        const Pixel next{cur.x + kRing[found].x, cur.y + kRing[found].y};
        const Pixel prev_checked{cur.x + kRing[(found + 7) % 8].x, cur.y + kRing[(found + 7) % 8].y};
        back_dir = ring_index({prev_checked.x - next.x, prev_checked.y - next.y});
        cur = next;

        // Jacob's criterion: back at the start, entered the same way.
        if (cur == start && prev_checked == start_back) break;
        if (!seen_states.insert(state_key(cur, back_dir)).second) break;
        boundary.push_back(cur);
    }

    std::vector<Point2> pts;
    pts.reserve(boundary.size());
    for (const auto& p : boundary) pts.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
    while (pts.size() > 1 && pts.back() == pts.front()) pts.pop_back();

    std::vector<Point2> distinct;
    for (const auto& p : pts) {
        if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
        if (distinct.size() >= 3) break;
    }
    if (distinct.size() < 3) {
        throw Error(ErrorCode::DegenerateRegion, "region has fewer than 3 boundary pixels");
    }
    return Contour(std::move(pts));
}

}  // namespace shapedp
