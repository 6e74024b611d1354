#include "shapedp/assignment.hpp"

#include <algorithm>
#include <limits>

#include "shapedp/error.hpp"

namespace shapedp {

Correspondence assign(const CostMatrix& cost, double dummy_cost) {
    const std::size_t rows = cost.rows();
    const std::size_t cols = cost.cols();
    if (rows == 0 || cols == 0) throw Error(ErrorCode::InvalidArgument, "assignment needs a non-empty matrix");
    const std::size_t s = std::max(rows, cols);
    auto at = [&](std::size_t r, std::size_t c) { return (r < rows && c < cols) ? cost(r, c) : dummy_cost; };

    // Shortest augmenting path with row/column potentials, 1-based with a
    // virtual column 0.
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(s + 1, 0.0), v(s + 1, 0.0);
    std::vector<std::size_t> match_col(s + 1, 0), way(s + 1, 0);
    for (std::size_t r = 1; r <= s; ++r) {
        match_col[0] = r;
        std::size_t col0 = 0;
        std::vector<double> min_v(s + 1, inf);
        std::vector<char> used(s + 1, 0);
        do {
            used[col0] = 1;
            const std::size_t r0 = match_col[col0];
            double delta = inf;
            std::size_t col1 = 0;
            for (std::size_t c = 1; c <= s; ++c) {
                if (used[c]) continue;
                const double cur = at(r0 - 1, c - 1) - u[r0] - v[c];
                if (cur < min_v[c]) {
                    min_v[c] = cur;
                    way[c] = col0;
                }
                if (min_v[c] < delta) {
                    delta = min_v[c];
                    col1 = c;
                }
            }
            for (std::size_t c = 0; c <= s; ++c) {
                if (used[c]) {
                    u[match_col[c]] += delta;
                    v[c] -= delta;
                } else {
                    min_v[c] -= delta;
                }
            }
            col0 = col1;
        } while (match_col[col0] != 0);
        do {
            const std::size_t col1 = way[col0];
            match_col[col0] = match_col[col1];
            col0 = col1;
        } while (col0 != 0);
    }

    std::vector<std::size_t> row_to_col(s, 0);
    for (std::size_t c = 1; c <= s; ++c) row_to_col[match_col[c] - 1] = c - 1;

    Correspondence out;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t c = row_to_col[r];
        if (c >= cols) continue;
        out.pairs.emplace_back(r, c);
        out.total_cost += cost(r, c);
    }
    return out;
}

}  // namespace shapedp
