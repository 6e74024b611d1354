#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "shapedp/alignment.hpp"
#include "shapedp/contour.hpp"
#include "shapedp/encoding.hpp"
#include "shapedp/shape_context.hpp"
#include "shapedp/tokens.hpp"

namespace shapedp {

struct ShapeRecord {
    std::string id;
    std::optional<std::string> label;
    SymbolString symbols;
    std::string fingerprint;
    std::optional<Contour> contour;  // canonical-frame outline, when kept
};

inline constexpr int kIndexFormatVersion = 1;

class Index {
public:
    Index() = default;
    explicit Index(std::string fingerprint) : fingerprint_(std::move(fingerprint)) {}

    const std::string& fingerprint() const noexcept { return fingerprint_; }
    const std::vector<ShapeRecord>& records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    /// Throws FingerprintMismatch, DuplicateId, or InvalidArgument for an
    /// empty signature.
    void add(ShapeRecord record);
    const ShapeRecord* find(const std::string& id) const;

private:
    std::string fingerprint_;
    std::vector<ShapeRecord> records_;
};

inline Index index_add(Index index, ShapeRecord record) {
    index.add(std::move(record));
    return index;
}

struct QueryHit {
    std::string id;
    std::optional<std::string> label;
    double similarity = 0.0;
    std::size_t rank = 1;  // 1 + number of strictly better hits
};

struct QueryOptions {
    ScoreTable scores;
    /// Skip records whose length-based similarity bound cannot reach the
    /// current k-th best.
    bool length_prefilter = false;
    unsigned threads = 0;  // 0 = hardware concurrency
};

using QueryResult = std::vector<QueryHit>;

/// Descending similarity, ties by id. Throws EmptyIndex.
QueryResult query_topk(const Index& index, const SymbolString& query, std::size_t k, const QueryOptions& opt = {});

/// Per-query detail of a bulls-eye run.
struct BullseyeRow {
    std::string id;
    std::string label;
    std::size_t hits = 0;
};

struct BullseyeReport {
    double score = 0.0;
    std::size_t class_size = 0;
    std::size_t depth = 0;
    std::vector<BullseyeRow> rows;
};

/// Every record queries the index; same-class records (itself included)
/// among the top `depth` count as hits. Score = hits / (records * class
/// size). `depth` 0 means twice the class size.
BullseyeReport bullseye(const Index& index, std::size_t depth = 0, const QueryOptions& opt = {});

/// Pairwise mode: aligns the query onto every record outline before
/// encoding it, then scores against that record. Records without an
/// outline are skipped.
QueryResult query_topk_pairwise(const Index& index, const Contour& query, std::size_t k,
                                const EncoderConfig& enc, const ScConfig& sc, const QueryOptions& opt = {});

}  // namespace shapedp
