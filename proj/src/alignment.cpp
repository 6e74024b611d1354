#include "shapedp/alignment.hpp"

#include <algorithm>
#include <cstdlib>

#include "shapedp/error.hpp"

namespace shapedp {

double ScoreTable::substitution(Token a, Token b) const {
    if (a == b) return match;
    if (a.family != b.family) return mismatch;
    const auto gap_in_rank = std::abs(static_cast<int>(a.rank) - static_cast<int>(b.rank));
    return 1.0 / static_cast<double>(gap_in_rank);
}

DpMatrix nw_fill(std::span<const Token> a, std::span<const Token> b, const ScoreTable& t) {
    DpMatrix f(a.size() + 1, b.size() + 1);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const double diag = f(i - 1, j - 1) + t.substitution(a[i - 1], b[j - 1]);
            const double up = f(i - 1, j) + t.gap;
            const double left = f(i, j - 1) + t.gap;
            f(i, j) = std::max({diag, up, left});
        }
    }
    return f;
}

double nw_score(std::span<const Token> a, std::span<const Token> b, const ScoreTable& t) {
    if (a.empty() || b.empty()) return 0.0;
    std::vector<double> prev(b.size() + 1, 0.0), cur(b.size() + 1, 0.0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = 0.0;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const double diag = prev[j - 1] + t.substitution(a[i - 1], b[j - 1]);
            cur[j] = std::max({diag, prev[j] + t.gap, cur[j - 1] + t.gap});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

Alignment traceback(const DpMatrix& f, std::span<const Token> a, std::span<const Token> b, const ScoreTable& t) {
    if (f.rows() != a.size() + 1 || f.cols() != b.size() + 1) {
        throw Error(ErrorCode::InconsistentMatrix, "matrix shape does not match the sequences");
    }
    std::vector<AlignOp> rev;
    std::size_t i = a.size();
    std::size_t j = b.size();
    while (i > 0 && j > 0) {
        const double here = f(i, j);
        const double s = t.substitution(a[i - 1], b[j - 1]);
        if (f(i - 1, j - 1) + s == here) {
            rev.push_back({OpKind::Match, i - 1, j - 1, s});
            --i;
            --j;
        } else if (f(i - 1, j) + t.gap == here) {
            rev.push_back({OpKind::GapInB, i - 1, j, t.gap});
            --i;
        } else if (f(i, j - 1) + t.gap == here) {
            rev.push_back({OpKind::GapInA, i, j - 1, t.gap});
            --j;
        } else {
            throw Error(ErrorCode::InconsistentMatrix,
                        "no predecessor reproduces cell (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
    }
    // Leading gaps run along the zero border and cost nothing.
    while (i > 0) {
        --i;
        rev.push_back({OpKind::GapInB, i, 0, 0.0});
    }
    while (j > 0) {
        --j;
        rev.push_back({OpKind::GapInA, 0, j, 0.0});
    }

    Alignment out;
    out.ops.assign(rev.rbegin(), rev.rend());
    for (const auto& op : out.ops) out.score += op.score;
    out.normalized = normalize_score(out.score, a.size(), b.size(), t);
    return out;
}

double normalize_score(double score, std::size_t len_a, std::size_t len_b, const ScoreTable& t) {
    if (len_a == 0 && len_b == 0) return 1.0;
    if (len_a == 0 || len_b == 0) return 0.0;
    return score / (t.match * static_cast<double>(std::max(len_a, len_b)));
}

double similarity(std::span<const Token> a, std::span<const Token> b, const ScoreTable& t) {
    return normalize_score(nw_score(a, b, t), a.size(), b.size(), t);
}

}  // namespace shapedp
