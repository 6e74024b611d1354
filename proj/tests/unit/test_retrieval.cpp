#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "shapedp/config.hpp"
#include "shapedp/error.hpp"
#include "shapedp/eval.hpp"
#include "shapedp/retrieval.hpp"
#include "shapedp/synthetic.hpp"

using namespace shapedp;

namespace {

ShapeRecord record(std::string id, std::optional<std::string> label, std::string_view tokens,
                   const std::string& fp = "fp") {
    return {std::move(id), std::move(label), SymbolString::parse(tokens), fp, std::nullopt};
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InvalidArgument;
}

Index synthetic_index(const SyntheticParams& p, const RunConfig& cfg, bool keep_outline = false) {
    Index index(cfg.fingerprint());
    for (const auto& s : gen_synthetic(p)) {
        const Contour canon = canonical_frame(s.contour, cfg.encoder.resample_n);
        ShapeRecord r{s.id, s.label, encode_shape(canon, cfg.encoder), cfg.fingerprint(), std::nullopt};
        if (keep_outline) r.contour = canon;
        index.add(std::move(r));
    }
    return index;
}

}  // namespace

TEST_CASE("index_add validates records") {
    Index index("fp");
    index = index_add(index, record("a", "x", "S S1 S2 A1 D1"));
    CHECK(index.size() == 1);
    CHECK(code_of([&] { index.add(record("b", "x", "S S1 S2 A1 D1", "other")); }) ==
          ErrorCode::FingerprintMismatch);
    CHECK(code_of([&] { index.add(record("a", "x", "L S1 S2 A1 D1")); }) == ErrorCode::DuplicateId);
    CHECK(code_of([&] { index.add(record("c", "x", "")); }) == ErrorCode::InvalidArgument);
    CHECK(index.size() == 1);
    CHECK(index.find("a") != nullptr);
    CHECK(index.find("zz") == nullptr);
}

TEST_CASE("query on an empty index or with k = 0 fails") {
    Index index("fp");
    const auto q = SymbolString::parse("S S1 S2 A1 D1");
    CHECK(code_of([&] { query_topk(index, q, 3); }) == ErrorCode::EmptyIndex);
    index.add(record("a", "x", "S S1 S2 A1 D1"));
    CHECK(code_of([&] { query_topk(index, q, 0); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("query ranks by similarity against a direct computation") {
    Index index("fp");
    index.add(record("far", "x", "L L1 L2 A6 D2"));
    index.add(record("same", "x", "S S1 S2 A1 D1"));
    index.add(record("near", "x", "L S1 M2 A1 D2"));
    const auto q = SymbolString::parse("S S1 S2 A1 D1");

    const auto hits = query_topk(index, q, 10);
    REQUIRE(hits.size() == 3);
    CHECK(hits[0].id == "same");
    CHECK(hits[0].similarity == 1.0);
    CHECK(hits[1].id == "near");
    CHECK(hits[1].similarity == doctest::Approx(0.7));
    CHECK(hits[2].id == "far");
    CHECK(hits[2].similarity == doctest::Approx(similarity(q, index.find("far")->symbols)));
    CHECK(hits[0].rank == 1);
    CHECK(hits[1].rank == 2);
    CHECK(hits[2].rank == 3);

    CHECK(query_topk(index, q, 1).size() == 1);
}

TEST_CASE("tied similarities share a rank and break ties by id") {
    Index index("fp");
    index.add(record("b", "x", "S S1 S2 A1 D1"));
    index.add(record("a", "x", "S S1 S2 A1 D1"));
    index.add(record("c", "x", "L L1 L2 A4 D2"));
    const auto hits = query_topk(index, SymbolString::parse("S S1 S2 A1 D1"), 3);
    CHECK(hits[0].id == "a");
    CHECK(hits[1].id == "b");
    CHECK(hits[0].rank == 1);
    CHECK(hits[1].rank == 1);
    CHECK(hits[2].rank == 3);
}

TEST_CASE("results do not depend on insertion order, threads or the prefilter") {
    SplitMix64 rng(5);
    std::vector<ShapeRecord> recs;
    for (int i = 0; i < 60; ++i) {
        const std::size_t groups = 1 + rng.next() % 5;
        std::vector<Token> t;
        for (std::size_t g = 0; g < groups; ++g) {
            t.push_back(rng.next() % 2 ? tok::S : tok::L);
            t.push_back(Token{Family::Dist1, 1 + static_cast<unsigned>(rng.next() % 3)});
            t.push_back(Token{Family::Dist2, 1 + static_cast<unsigned>(rng.next() % 3)});
            t.push_back(tok::A(1 + static_cast<unsigned>(rng.next() % 6)));
            t.push_back(rng.next() % 2 ? tok::D1 : tok::D2);
        }
        recs.push_back({"r" + std::to_string(i), std::nullopt, SymbolString(t), "fp", std::nullopt});
    }
    Index forward("fp"), backward("fp");
    for (const auto& r : recs) forward.add(r);
    for (auto it = recs.rbegin(); it != recs.rend(); ++it) backward.add(*it);

    for (int qi = 0; qi < 10; ++qi) {
        const auto& q = recs[rng.next() % recs.size()].symbols;
        QueryOptions serial;
        serial.threads = 1;
        QueryOptions pre;
        pre.length_prefilter = true;
        QueryOptions many;
        many.threads = 4;
        const auto a = query_topk(forward, q, 7, serial);
        const auto b = query_topk(backward, q, 7, many);
        const auto c = query_topk(backward, q, 7, pre);
        REQUIRE(a.size() == 7);
        REQUIRE(b.size() == 7);
        REQUIRE(c.size() == 7);
        for (std::size_t i = 0; i < 7; ++i) {
            CHECK(a[i].id == b[i].id);
            CHECK(a[i].id == c[i].id);
            CHECK(a[i].similarity == c[i].similarity);
            CHECK(a[i].rank == c[i].rank);
        }
    }
}

TEST_CASE("bulls-eye on hand-built indexes") {
    Index one("fp");
    one.add(record("a", "x", "S S1 S2 A1 D1"));
    one.add(record("b", "x", "L L1 L2 A6 D2"));
    const auto single = bullseye(one);
    CHECK(single.score == 1.0);
    CHECK(single.class_size == 2);
    CHECK(single.depth == 4);

    Index sep("fp");
    sep.add(record("a1", "a", "S S1 S2 A1 D1"));
    sep.add(record("a2", "a", "S S1 S2 A2 D1"));
    sep.add(record("b1", "b", "L L1 L2 A5 D2"));
    sep.add(record("b2", "b", "L L1 L2 A6 D2"));
    CHECK(bullseye(sep, 2).score == 1.0);

    Index mixed("fp");
    mixed.add(record("a1", "a", "S S1 S2 A1 D1"));
    mixed.add(record("a2", "b", "S S1 S2 A2 D1"));
    mixed.add(record("b1", "a", "L L1 L2 A5 D2"));
    mixed.add(record("b2", "b", "L L1 L2 A6 D2"));
    CHECK(bullseye(mixed, 2).score == 0.5);

    Index unlabeled("fp");
    unlabeled.add(record("a", std::nullopt, "S S1 S2 A1 D1"));
    CHECK(code_of([&] { bullseye(unlabeled); }) == ErrorCode::UnlabeledRecord);

    Index uneven("fp");
    uneven.add(record("a1", "a", "S S1 S2 A1 D1"));
    uneven.add(record("a2", "a", "S S1 S2 A1 D1"));
    uneven.add(record("b1", "b", "S S1 S2 A1 D1"));
    CHECK(code_of([&] { bullseye(uneven); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("synthetic generator") {
    SyntheticParams p;
    p.noise_level = 0.02;
    const auto a = gen_synthetic(p);
    const auto b = gen_synthetic(p);
    REQUIRE(a.size() == 40);
    std::set<std::string> ids, labels;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ids.insert(a[i].id);
        labels.insert(a[i].label);
        CHECK(a[i].contour.size() == p.points);
        CHECK(a[i].id == b[i].id);
        const auto pa = a[i].contour.points(), pb = b[i].contour.points();
        CHECK(std::equal(pa.begin(), pa.end(), pb.begin(), [](Point2 x, Point2 y) { return x.x == y.x && x.y == y.y; }));
    }
    CHECK(ids.size() == 40);
    CHECK(labels.size() == 5);

    p.seed = 2;
    const auto c = gen_synthetic(p);
    CHECK(c[0].contour.points()[0].x != a[0].contour.points()[0].x);
}

TEST_CASE("noise-free instances of one class share a signature") {
    SyntheticParams p;
    p.class_count = 4;
    p.per_class = 3;
    const RunConfig cfg;
    const auto index = synthetic_index(p, cfg);
    for (const auto& r : index.records()) {
        for (const auto& s : index.records()) {
            if (r.label == s.label) CHECK(r.symbols.str() == s.symbols.str());
        }
    }
    CHECK(bullseye(index).score == 1.0);
}

TEST_CASE("pairwise mode finds the query's own record") {
    SyntheticParams p;
    p.class_count = 4;
    p.per_class = 2;
    p.noise_level = 0.01;
    const RunConfig cfg;
    const auto index = synthetic_index(p, cfg, true);
    const auto shapes = gen_synthetic(p);
    const auto hits = query_topk_pairwise(index, shapes[3].contour, 3, cfg.encoder, cfg.shape_context);
    REQUIRE(!hits.empty());
    CHECK(hits[0].similarity == doctest::Approx(1.0).epsilon(0.05));
    CHECK(hits[0].label == shapes[3].label);

    const auto plain = synthetic_index(p, cfg, false);
    CHECK(code_of([&] { query_topk_pairwise(plain, shapes[3].contour, 3, cfg.encoder, cfg.shape_context); }) ==
          ErrorCode::EmptyIndex);
}

TEST_CASE("re-encoding stored outlines reproduces the signatures") {
    SyntheticParams p;
    p.class_count = 3;
    p.per_class = 2;
    p.noise_level = 0.02;
    RunConfig cfg;
    const auto shapes = gen_synthetic(p);
    const auto index = build_index(shapes, cfg, true);
    const auto again = reencode_index(index, cfg);
    REQUIRE(again.size() == index.size());
    for (std::size_t i = 0; i < index.size(); ++i) CHECK(again.records()[i].symbols == index.records()[i].symbols);

    cfg.set("q_angle_bins", "3");
    const auto coarse = reencode_index(index, cfg);
    CHECK(coarse.fingerprint() == cfg.fingerprint());
    CHECK(coarse.fingerprint() != index.fingerprint());

    const unsigned bins[] = {3, 6};
    const auto from_shapes = angle_bin_sweep(shapes, RunConfig{}, bins);
    const auto from_index = angle_bin_sweep(index, RunConfig{}, bins);
    REQUIRE(from_shapes.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) CHECK(from_shapes[i].report.score == from_index[i].report.score);

    const auto plain = build_index(shapes, RunConfig{}, false);
    CHECK_THROWS_AS(reencode_index(plain, RunConfig{}), Error);
}
