#include "shapedp/retrieval.hpp"

#include <algorithm>
#include <map>
#include <thread>

#include "shapedp/error.hpp"

namespace shapedp {

void Index::add(ShapeRecord record) {
    if (record.fingerprint != fingerprint_) {
        throw Error(ErrorCode::FingerprintMismatch,
                    "record '" + record.id + "' fingerprint " + record.fingerprint + " != index " + fingerprint_);
    }
    if (find(record.id) != nullptr) throw Error(ErrorCode::DuplicateId, "record id '" + record.id + "' already present");
    if (record.symbols.empty()) throw Error(ErrorCode::InvalidArgument, "record '" + record.id + "' has no symbols");
    records_.push_back(std::move(record));
}

const ShapeRecord* Index::find(const std::string& id) const {
    for (const auto& r : records_) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

namespace {

unsigned worker_count(const QueryOptions& opt, std::size_t jobs) {
    unsigned n = opt.threads != 0 ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, jobs / 8)));
}

// Runs body(i) for i in [0, count) over a few threads; each i is written by
// exactly one worker.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body body) {
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([=, &body] {
            for (std::size_t i = w; i < count; i += workers) body(i);
        });
    }
}

QueryResult rank_hits(std::vector<QueryHit> hits, std::size_t k) {
    std::sort(hits.begin(), hits.end(), [](const QueryHit& a, const QueryHit& b) {
        if (a.similarity != b.similarity) return a.similarity > b.similarity;
        return a.id < b.id;
    });
    for (std::size_t i = 0; i < hits.size(); ++i) {
        hits[i].rank = (i > 0 && hits[i].similarity == hits[i - 1].similarity) ? hits[i - 1].rank : i + 1;
    }
    if (hits.size() > k) hits.resize(k);
    return hits;
}

}  // namespace

QueryResult query_topk(const Index& index, const SymbolString& query, std::size_t k, const QueryOptions& opt) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
    if (index.empty()) throw Error(ErrorCode::EmptyIndex, "index has no records");
    const auto& records = index.records();

    std::vector<QueryHit> hits(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) hits[i] = {records[i].id, records[i].label, 0.0, 1};

    if (!opt.length_prefilter) {
        parallel_for(records.size(), worker_count(opt, records.size()), [&](std::size_t i) {
            hits[i].similarity = similarity(query, records[i].symbols, opt.scores);
        });
        return rank_hits(std::move(hits), k);
    }

    // At most min/max of the lengths can match, so that ratio bounds the
    // normalized score. Visit in descending bound and stop once the bound
    // falls below the k-th best found so far.
    auto bound = [&](std::size_t i) {
        const double m = static_cast<double>(query.size());
        const double n = static_cast<double>(records[i].symbols.size());
        return std::max(m, n) > 0.0 ? std::min(m, n) / std::max(m, n) : 1.0;
    };
    std::vector<std::size_t> order(records.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return bound(x) > bound(y); });

    std::vector<QueryHit> kept;
    std::vector<double> best;  // min-heap of the top k similarities
    auto greater = std::greater<double>();
    for (std::size_t i : order) {
        if (best.size() == k && bound(i) < best.front()) break;
        hits[i].similarity = similarity(query, records[i].symbols, opt.scores);
        kept.push_back(hits[i]);
        best.push_back(hits[i].similarity);
        std::push_heap(best.begin(), best.end(), greater);
        if (best.size() > k) {
            std::pop_heap(best.begin(), best.end(), greater);
            best.pop_back();
        }
    }
    return rank_hits(std::move(kept), k);
}

QueryResult query_topk_pairwise(const Index& index, const Contour& query, std::size_t k, const EncoderConfig& enc,
                                const ScConfig& sc, const QueryOptions& opt) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
    if (index.empty()) throw Error(ErrorCode::EmptyIndex, "index has no records");
    const auto& records = index.records();
    const Contour sampled = canonical_frame(query, enc.resample_n);

    std::vector<QueryHit> hits(records.size());
    std::vector<char> usable(records.size(), 0);
    parallel_for(records.size(), worker_count(opt, records.size()), [&](std::size_t i) {
        const auto& rec = records[i];
        hits[i] = {rec.id, rec.label, 0.0, 1};
        if (!rec.contour) return;
        const auto aligned = align_pair(*rec.contour, sampled, sc);
        hits[i].similarity = similarity(encode_shape(aligned.aligned, enc), rec.symbols, opt.scores);
        usable[i] = 1;
    });
    std::vector<QueryHit> kept;
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (usable[i]) kept.push_back(std::move(hits[i]));
    }
    if (kept.empty()) throw Error(ErrorCode::EmptyIndex, "no record stores an outline for pairwise alignment");
    return rank_hits(std::move(kept), k);
}

BullseyeReport bullseye(const Index& index, std::size_t depth, const QueryOptions& opt) {
    if (index.empty()) throw Error(ErrorCode::EmptyIndex, "index has no records");
    std::map<std::string, std::size_t> class_sizes;
    for (const auto& r : index.records()) {
        if (!r.label) throw Error(ErrorCode::UnlabeledRecord, "record '" + r.id + "' has no class label");
        ++class_sizes[*r.label];
    }
    const std::size_t c = class_sizes.begin()->second;
    for (const auto& [label, size] : class_sizes) {
        if (size != c) throw Error(ErrorCode::InvalidArgument, "bulls-eye needs classes of equal size");
    }

    BullseyeReport report;
    report.class_size = c;
    report.depth = depth == 0 ? 2 * c : depth;

    const auto& records = index.records();
    report.rows.resize(records.size());
    QueryOptions inner = opt;
    inner.threads = 1;
    parallel_for(records.size(), worker_count(opt, records.size() * 8), [&](std::size_t q) {
        const auto top = query_topk(index, records[q].symbols, report.depth, inner);
        std::size_t hits = 0;
        for (const auto& h : top) hits += (h.label == records[q].label) ? 1 : 0;
        report.rows[q] = {records[q].id, *records[q].label, hits};
    });

    std::size_t total = 0;
    for (const auto& row : report.rows) total += row.hits;
    report.score = static_cast<double>(total) / static_cast<double>(records.size() * c);
    return report;
}

}  // namespace shapedp
