#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "shapedp/error.hpp"
#include "shapedp/shape_context.hpp"

using namespace shapedp;

namespace {

ScHistogram hist_of(std::vector<double> norm) {
    ScHistogram h;
    h.norm = std::move(norm);
    h.counts.assign(h.norm.size(), 0);
    return h;
}

// Asymmetric closed outline used by several alignment tests.
Contour lopsided(std::size_t n) {
    std::vector<Point2> pts;
    for (std::size_t k = 0; k < n; ++k) {
        const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
        const double r = 1.0 + 0.3 * std::cos(2 * t) + 0.15 * std::sin(3 * t + 0.4);
        pts.push_back({1.4 * r * std::cos(t), r * std::sin(t)});
    }
    return Contour(pts);
}

double mean_pair_distance(const Contour& a, const Contour& b, const Correspondence& c) {
    double s = 0.0;
    for (auto [i, j] : c.pairs) s += distance(a[i], b[j]);
    return s / static_cast<double>(c.pairs.size());
}

}  // namespace

TEST_CASE("histograms: counts sum to n-1") {
    const ScConfig cfg;
    const auto two = compute_histograms(std::vector<Point2>{{0, 0}, {1, 0}}, cfg);
    REQUIRE(two.size() == 2);
    for (const auto& h : two) {
        CHECK(std::accumulate(h.counts.begin(), h.counts.end(), 0u) == 1);
        CHECK(h.counts.size() == 60);
    }

    SplitMix64 rng(3);
    std::vector<Point2> pts;
    for (int i = 0; i < 10; ++i) pts.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5)});
    const auto hs = compute_histograms(pts, cfg);
    for (const auto& h : hs) {
        CHECK(std::accumulate(h.counts.begin(), h.counts.end(), 0u) == 9);
        double s = 0.0;
        for (double v : h.norm) s += v;
        CHECK(s == doctest::Approx(1.0));
    }
}

TEST_CASE("histograms: hexagon vertices agree up to the 60-degree bin shift") {
    // Offset by 15 degrees so no direction sits on a 30-degree bin edge.
    const auto hex = oracle::circle_points(6, 1.0, {}, kPi / 12.0);
    ScConfig cfg;
    cfg.radial_bins = 1;
    cfg.angular_bins = 12;
    const auto hs = compute_histograms(hex, cfg);
    for (std::size_t v = 1; v < 6; ++v) {
        for (std::size_t k = 0; k < 12; ++k) CHECK(hs[v].counts[(k + 2 * v) % 12] == hs[0].counts[k]);
    }
}

TEST_CASE("histograms: far and near points land in the end rings") {
    ScConfig cfg;
    cfg.angular_bins = 1;
    // Mean pairwise distance of {0, 0.01, 100} on a line is about 66.7.
    const auto hs = compute_histograms(std::vector<Point2>{{0, 0}, {0.01, 0}, {100, 0}}, cfg);
    CHECK(hs[0].counts[0] == 1);                     // 0.01 is inside r_inner
    CHECK(hs[0].counts[cfg.radial_bins - 1] == 1);   // 100 is inside r_outer's ring
}

TEST_CASE("chi2_cost examples") {
    CHECK(chi2_cost(hist_of({0.25, 0.75}), hist_of({0.25, 0.75})) == 0.0);
    CHECK(chi2_cost(hist_of({1, 0}), hist_of({0, 1})) == doctest::Approx(1.0));
    CHECK(chi2_cost(hist_of({0.5, 0.5}), hist_of({1, 0})) == doctest::Approx(1.0 / 3.0));
    CHECK(chi2_cost(hist_of({0, 0, 1}), hist_of({0, 0, 1})) == 0.0);
    CHECK_THROWS_AS(chi2_cost(hist_of({1}), hist_of({0.5, 0.5})), Error);
}

TEST_CASE("assign examples") {
    CostMatrix one(1, 1, 0.3);
    const auto a = assign(one);
    REQUIRE(a.pairs.size() == 1);
    CHECK(a.pairs[0] == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(a.total_cost == doctest::Approx(0.3));

    CostMatrix two(2, 2);
    two(0, 0) = 1;
    two(0, 1) = 2;
    two(1, 0) = 2;
    two(1, 1) = 1;
    const auto b = assign(two);
    CHECK(b.pairs == std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}});
    CHECK(b.total_cost == 2.0);
}

TEST_CASE("assign matches brute force on rectangular matrices and drops dummies") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng.next() % 6, c = 1 + rng.next() % 6;
        const auto m = oracle::random_dyadic_matrix(rng, r, c);
        const auto got = assign(m);
        CHECK(got.pairs.size() == std::min(r, c));
        CHECK(got.total_cost == oracle::brute_force_assignment(m));
        std::vector<char> row_used(r, 0), col_used(c, 0);
        for (auto [i, j] : got.pairs) {
            CHECK(i < r);
            CHECK(j < c);
            CHECK_FALSE(row_used[i]);
            CHECK_FALSE(col_used[j]);
            row_used[i] = col_used[j] = 1;
        }
    }
}

TEST_CASE("assign never beats the identity pairing from above") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng.next() % 10;
        const auto m = oracle::random_dyadic_matrix(rng, n, n);
        double identity = 0.0;
        for (std::size_t i = 0; i < n; ++i) identity += m(i, i);
        CHECK(assign(m).total_cost <= identity);
    }
}

TEST_CASE("procrustes recovers known transforms") {
    const Contour target = lopsided(40);
    Correspondence ident;
    for (std::size_t i = 0; i < target.size(); ++i) ident.pairs.emplace_back(i, i);

    SUBCASE("identity") {
        const auto fit = procrustes(target, target, ident);
        CHECK(std::abs(fit.transform.rotation) < 1e-12);
        CHECK(fit.transform.scale == doctest::Approx(1.0));
        CHECK(std::abs(fit.transform.translation.x) < 1e-12);
        CHECK(fit.residual < 1e-12);
    }
    SUBCASE("rotation about the centroid") {
        const Point2 c = centroid(target.points());
        std::vector<Point2> src;
        for (const auto& p : target.points()) src.push_back(c + oracle::rotate(p - c, kPi / 4));
        const auto fit = procrustes(target, Contour(src), ident);
        CHECK(fit.transform.rotation == doctest::Approx(-kPi / 4));
        CHECK(fit.residual < 1e-9);
    }
    SUBCASE("scale and shift") {
        std::vector<Point2> src;
        for (const auto& p : target.points()) src.push_back(3.0 * p + Point2{2, 1});
        const auto fit = procrustes(target, Contour(src), ident);
        CHECK(fit.transform.scale == doctest::Approx(1.0 / 3.0));
        CHECK(fit.residual < 1e-9);
        for (std::size_t i = 0; i < target.size(); ++i) CHECK(distance(fit.aligned[i], target[i]) < 1e-9);
    }
    SUBCASE("degenerate correspondences") {
        Correspondence single;
        single.pairs = {{0, 0}};
        CHECK_THROWS_AS(procrustes(target, target, single), Error);
        Correspondence same_source;
        same_source.pairs = {{0, 3}, {1, 3}, {2, 3}};
        try {
            procrustes(target, target, same_source);
            FAIL("expected DegenerateCorrespondence");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DegenerateCorrespondence);
        }
    }
}

TEST_CASE("align_pair: self, translated and rotated copies") {
    const ScConfig cfg;
    const Contour a = lopsided(100);
    double scale = 0.0;
    for (const auto& p : a.points()) scale = std::max(scale, norm(p - centroid(a.points())));

    SUBCASE("self") {
        const auto r = align_pair(a, a, cfg);
        CHECK(r.correspondence.pairs.size() == a.size());
        CHECK(r.correspondence.total_cost == 0.0);
        CHECK(std::abs(r.transform.rotation) < 1e-9);
        CHECK(r.transform.scale == doctest::Approx(1.0));
    }
    SUBCASE("translated") {
        std::vector<Point2> moved;
        for (const auto& p : a.points()) moved.push_back(p + Point2{13.5, -4.25});
        const auto r = align_pair(a, Contour(moved), cfg);
        CHECK(mean_pair_distance(a, r.aligned, r.correspondence) < 1e-6 * scale);
    }
    SUBCASE("rotated 30 degrees") {
        std::vector<Point2> turned;
        for (const auto& p : a.points()) turned.push_back(oracle::rotate(p, kPi / 6));
        const auto r = align_pair(a, Contour(turned), cfg);
        CHECK(mean_pair_distance(a, r.aligned, r.correspondence) < 0.02 * scale);
        CHECK(r.residual <= r.initial_residual);
    }
    SUBCASE("rotated and resampled from another start") {
        std::vector<Point2> turned;
        for (const auto& p : a.points()) turned.push_back(2.0 * oracle::rotate(p, kPi / 6));
        const Contour ra = resample(a, 100);
        const Contour b = resample(Contour(turned).rotated_start(7), 100);
        const auto r = align_pair(ra, b, cfg);
        CHECK(mean_pair_distance(ra, r.aligned, r.correspondence) < 0.02 * scale);
    }
}

TEST_CASE("align_pair refinement never increases the residual") {
    SplitMix64 rng(21);
    const ScConfig cfg;
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Point2> pa, pb;
        const double turn = rng.uniform(-1.0, 1.0);
        for (std::size_t k = 0; k < 60; ++k) {
            const double t = kTwoPi * static_cast<double>(k) / 60.0;
            const double r = 1.0 + 0.3 * std::cos(3 * t + trial);
            const Point2 p{1.3 * r * std::cos(t), r * std::sin(t)};
            pa.push_back(p);
            pb.push_back(oracle::rotate(p, turn) + Point2{rng.uniform(-0.02, 0.02), rng.uniform(-0.02, 0.02)});
        }
        const auto r = align_pair(Contour(pa), Contour(pb), cfg);
        CHECK(r.residual <= r.initial_residual);
    }
}

TEST_CASE("chi-square cost of disjoint histograms is 1 and never above it") {
    ScHistogram g, h;
    g.counts = {3, 0, 0, 4, 0, 0, 0};
    h.counts = {0, 1, 5, 0, 0, 1, 0};
    for (unsigned c : g.counts) g.norm.push_back(c / 7.0);
    for (unsigned c : h.counts) h.norm.push_back(c / 7.0);
    CHECK(chi2_cost(g, h) <= 1.0);
    CHECK(chi2_cost(g, h) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(chi2_cost(h, g) == chi2_cost(g, h));
    // Thirds do not sum to one exactly.
    ScHistogram a, b;
    a.norm = {1.0 / 3, 1.0 / 3, 1.0 / 3, 0, 0, 0};
    b.norm = {0, 0, 0, 1.0 / 3, 1.0 / 3, 1.0 / 3};
    CHECK(chi2_cost(a, b) <= 1.0);
}
