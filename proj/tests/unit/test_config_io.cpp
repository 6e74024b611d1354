#include <doctest.h>

#include <filesystem>

#include <unistd.h>

#include "oracles.hpp"
#include "shapedp/config.hpp"
#include "shapedp/error.hpp"
#include "shapedp/io.hpp"

using namespace shapedp;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / ("shapedp_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("config text round-trips every key") {
    RunConfig c;
    c.set("arp_rings", "3");
    c.set("q_area_threshold", "0.02");
    c.set("score_gap", "-1.5");
    c.set("arp_center", "min_enclosing");
    const auto back = RunConfig::from_text(c.to_text());
    CHECK(back.values() == c.values());
    CHECK(back.get("arp_rings") == "3");
    CHECK(back.get("score_gap") == "-1.5");
    CHECK(back.fingerprint() == c.fingerprint());
    CHECK(c.values().size() == config_keys().size());
}

TEST_CASE("config rejects unknown keys and bad values") {
    RunConfig c;
    CHECK_THROWS_AS(c.set("no_such_key", "1"), Error);
    CHECK_THROWS_AS(c.set("arp_rings", "abc"), Error);
    CHECK_THROWS_AS(RunConfig::from_text("arp_rings 3\n"), Error);
    c.set("arp_rings", "0");
    CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("config text accepts comments and blank lines") {
    const auto c = RunConfig::from_text("# comment\n\narp_wedges = 12\n");
    CHECK(c.encoder.arp.wedges == 12);
}

TEST_CASE("fingerprint tracks encoding keys only") {
    RunConfig a, b;
    CHECK(a.fingerprint() == b.fingerprint());
    b.set("score_match", "3");
    CHECK(a.fingerprint() == b.fingerprint());
    b.set("q_angle_bins", "5");
    CHECK(a.fingerprint() != b.fingerprint());
    CHECK(a.fingerprint().size() == 16);
}

TEST_CASE("format_number is shortest round-trip") {
    CHECK(format_number(0.25) == "0.25");
    CHECK(format_number(3.0) == "3");
    CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("contour JSON round-trip and errors") {
    const Contour c({{0, 0}, {2.5, 0}, {2.5, 1.25}, {0, 1}});
    const auto back = parse_contour_json(contour_to_json(c));
    REQUIRE(back.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(back.points()[i].x == c.points()[i].x);
        CHECK(back.points()[i].y == c.points()[i].y);
    }
    CHECK_THROWS_AS(parse_contour_json("{\"points\": [[0,0],[1,0]]}"), Error);
    CHECK_THROWS_AS(parse_contour_json("not json"), Error);
    CHECK_THROWS_AS(parse_contour_json("{\"points\": [[0,0],[1,0],[1,1]], \"closed\": false}"), Error);
}

TEST_CASE("mask JSON and PGM parse to the same mask") {
    const auto jm = parse_mask_json("{\"width\":3,\"height\":2,\"rows\":[[0,1,1],[true,false,1]]}");
    const std::string ascii = "P2\n# test\n3 2\n255\n0 255 200\n128 127 255\n";
    std::string binary = "P5 3 2 255\n";
    for (unsigned char v : {0, 255, 200, 128, 127, 255}) binary.push_back(static_cast<char>(v));
    const auto am = parse_pgm(ascii);
    const auto bm = parse_pgm(binary);
    for (long y = 0; y < 2; ++y) {
        for (long x = 0; x < 3; ++x) {
            CHECK(jm.at(x, y) == am.at(x, y));
            CHECK(jm.at(x, y) == bm.at(x, y));
        }
    }
    CHECK(jm.foreground_count() == 4);
    CHECK_THROWS_AS(parse_pgm("P6 1 1 255\n\x01"), Error);
    CHECK_THROWS_AS(parse_pgm("P5 4 4 255\n\x01"), Error);
    CHECK_THROWS_AS(parse_mask_json("{\"width\":2,\"height\":2,\"rows\":[[0,1]]}"), Error);
}

TEST_CASE("load_contour picks the format from the content") {
    const auto dir = scratch_dir();
    write_file_atomic(dir / "c.json", "{\"points\": [[0,0],[4,0],[4,3]]}");
    std::string pgm = "P2 5 5 255\n";
    for (int y = 0; y < 5; ++y) {
        for (int x = 0; x < 5; ++x) pgm += (x >= 1 && x <= 3 && y >= 1 && y <= 3) ? "255 " : "0 ";
    }
    write_file_atomic(dir / "m.pgm", pgm);
    write_file_atomic(dir / "m.json", "{\"width\":5,\"height\":5,\"rows\":[[0,0,0,0,0],[0,1,1,1,0],[0,1,1,1,0],[0,1,1,1,0],[0,0,0,0,0]]}");
    write_file_atomic(dir / "bad.json", "{\"what\": 1}");

    CHECK(load_contour(dir / "c.json").size() == 3);
    const auto a = load_contour(dir / "m.pgm");
    const auto b = load_contour(dir / "m.json");
    CHECK(a.size() == 8);
    CHECK(b.size() == 8);
    CHECK(signed_area(a.points()) == doctest::Approx(4.0));
    CHECK_THROWS_AS(load_contour(dir / "bad.json"), Error);
    CHECK_THROWS_AS(load_contour(dir / "missing.json"), Error);
    fs::remove_all(dir);
}

TEST_CASE("atomic write replaces the file and leaves no temporary behind") {
    const auto dir = scratch_dir();
    write_file_atomic(dir / "f.txt", "one");
    write_file_atomic(dir / "f.txt", "two");
    CHECK(read_file(dir / "f.txt") == "two");
    std::size_t entries = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++entries;
    CHECK(entries == 1);
    fs::remove_all(dir);
}

TEST_CASE("index JSON round-trip") {
    RunConfig cfg;
    cfg.set("arp_wedges", "6");
    Index index(cfg.fingerprint());
    index.add({"a", "cls", SymbolString::parse("S S1 S2 A1 D1 | L M1 L2 A6 D2"), cfg.fingerprint(), std::nullopt});
    index.add({"b", std::nullopt, SymbolString::parse("L L1 M2 A3 D1"), cfg.fingerprint(),
               Contour({{0, 0}, {1, 0}, {0, 1}})});
    const auto text = index_to_json(index, cfg);
    const auto loaded = index_from_json(text);
    CHECK(loaded.index.fingerprint() == cfg.fingerprint());
    CHECK(loaded.config.get("arp_wedges") == "6");
    REQUIRE(loaded.index.size() == 2);
    CHECK(loaded.index.records()[0].symbols == index.records()[0].symbols);
    CHECK(loaded.index.records()[0].label == std::optional<std::string>("cls"));
    CHECK(!loaded.index.records()[1].label);
    REQUIRE(loaded.index.records()[1].contour);
    CHECK(loaded.index.records()[1].contour->size() == 3);
    CHECK(index_to_json(loaded.index, loaded.config) == text);
}

TEST_CASE("index JSON with a tampered config is rejected") {
    RunConfig cfg;
    Index index(cfg.fingerprint());
    index.add({"a", "x", SymbolString::parse("S S1 S2 A1 D1"), cfg.fingerprint(), std::nullopt});
    auto text = index_to_json(index, cfg);
    const auto pos = text.find("\"arp_rings\": \"4\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, std::string("\"arp_rings\": \"4\"").size(), "\"arp_rings\": \"5\"");
    try {
        index_from_json(text);
        FAIL("expected a fingerprint error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FingerprintMismatch);
    }
    CHECK_THROWS_AS(index_from_json("{\"version\": 99, \"records\": []}"), Error);
}
