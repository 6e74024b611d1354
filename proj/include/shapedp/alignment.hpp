#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "shapedp/tokens.hpp"

namespace shapedp {

/// Substitution and gap scores. Within one family, ranks i != j score
/// 1/|i - j|; across families `mismatch`; equal tokens `match`.
struct ScoreTable {
    double match = 2.0;
    double gap = -2.0;
    double mismatch = -2.0;

    double substitution(Token a, Token b) const;
};

inline double substitution_score(Token a, Token b, const ScoreTable& t = {}) { return t.substitution(a, b); }

/// (|a|+1) x (|b|+1) score grid; rows follow a, columns follow b.
class DpMatrix {
public:
    DpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, 0.0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
    double final_score() const { return cells_.back(); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> cells_;
};

/// Borders are zero; each interior cell is the best of the diagonal step
/// plus the substitution score and either gap step plus the gap score.
DpMatrix nw_fill(std::span<const Token> a, std::span<const Token> b, const ScoreTable& t = {});

enum class OpKind {
    Match,   // a[i] against b[j]
    GapInA,  // b[j] against a gap
    GapInB,  // a[i] against a gap
};

struct AlignOp {
    OpKind kind;
    std::size_t i = 0;   // index into a (Match, GapInB)
    std::size_t j = 0;   // index into b (Match, GapInA)
    double score = 0.0;  // leading gaps along the zero border score 0
};

struct Alignment {
    std::vector<AlignOp> ops;  // in sequence order
    double score = 0.0;
    double normalized = 0.0;
};

/// Walks back from the bottom-right cell preferring diagonal, then up (gap
/// in b), then left (gap in a). Throws InconsistentMatrix when no move
/// reproduces a cell.
Alignment traceback(const DpMatrix& f, std::span<const Token> a, std::span<const Token> b,
                    const ScoreTable& t = {});

/// Final score over 2 * max(|a|, |b|); 1 when both are empty, 0 when one is.
double normalize_score(double score, std::size_t len_a, std::size_t len_b, const ScoreTable& t = {});

double similarity(std::span<const Token> a, std::span<const Token> b, const ScoreTable& t = {});
inline double similarity(const SymbolString& a, const SymbolString& b, const ScoreTable& t = {}) {
    return similarity(a.tokens(), b.tokens(), t);
}

/// Same result as nw_fill(...).final_score() with O(|b|) memory.
double nw_score(std::span<const Token> a, std::span<const Token> b, const ScoreTable& t = {});

}  // namespace shapedp
