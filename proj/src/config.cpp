#include "shapedp/config.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <cctype>
#include <cstdint>

#include "shapedp/error.hpp"

namespace shapedp {

std::string format_number(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) return std::to_string(v);
    return std::string(buf, ptr);
}

namespace {

double parse_double(std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::InvalidArgument, "key '" + std::string(key) + "' expects a number, got '" + std::string(text) + "'");
    }
    return v;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::InvalidArgument, "key '" + std::string(key) + "' expects a non-negative integer, got '" + std::string(text) + "'");
    }
    return v;
}

struct KeySpec {
    const char* name;
    const char* help;
    bool encoding;
    std::function<std::string(const RunConfig&)> get;
    std::function<void(RunConfig&, std::string_view)> set;
};

#define SHAPEDP_COUNT_KEY(NAME, HELP, FIELD)                                                      \
    KeySpec {                                                                                     \
        NAME, HELP, true, [](const RunConfig& c) { return std::to_string(c.FIELD); },             \
            [](RunConfig& c, std::string_view v) {                                                \
                c.FIELD = static_cast<decltype(c.FIELD)>(parse_count(NAME, v));                   \
            }                                                                                     \
    }
#define SHAPEDP_REAL_KEY(NAME, HELP, ENCODING, FIELD)                                             \
    KeySpec {                                                                                     \
        NAME, HELP, ENCODING, [](const RunConfig& c) { return format_number(c.FIELD); },          \
            [](RunConfig& c, std::string_view v) { c.FIELD = parse_double(NAME, v); }             \
    }

const std::vector<KeySpec>& specs() {
    static const std::vector<KeySpec> table = {
        KeySpec{"arp_center", "surrounding circle centre: centroid | min_enclosing (default centroid)", true,
                [](const RunConfig& c) -> std::string {
                    return c.encoder.arp.center == CircleCenter::Centroid ? "centroid" : "min_enclosing";
                },
                [](RunConfig& c, std::string_view v) {
                    if (v == "centroid") c.encoder.arp.center = CircleCenter::Centroid;
                    else if (v == "min_enclosing") c.encoder.arp.center = CircleCenter::MinimalEnclosing;
                    else throw Error(ErrorCode::InvalidArgument, "arp_center expects centroid or min_enclosing");
                }},
        SHAPEDP_COUNT_KEY("arp_rings", "radial partitions M (default 4)", encoder.arp.rings),
        SHAPEDP_REAL_KEY("arp_start_angle", "clockwise offset of wedge 0 from +x in radians (default 0)", true,
                         encoder.arp.start_angle),
        SHAPEDP_COUNT_KEY("arp_wedges", "angular partitions N (default 8)", encoder.arp.wedges),
        SHAPEDP_COUNT_KEY("q_angle_bins", "chord inclination bins K over [0, pi) (default 6)", encoder.quantizer.angle_bins),
        SHAPEDP_REAL_KEY("q_area_threshold", "area/(pi R^2) from which the area symbol is L (default 0.01)", true,
                         encoder.quantizer.area_threshold),
        SHAPEDP_REAL_KEY("q_degree_threshold", "convexity degree from which the symbol is D2 (default 0.25)", true,
                         encoder.quantizer.degree_threshold),
        SHAPEDP_REAL_KEY("q_dist_edge_high", "d/R edge between medium and large (default 2/3)", true,
                         encoder.quantizer.dist_edge_high),
        SHAPEDP_REAL_KEY("q_dist_edge_low", "d/R edge between small and medium (default 1/3)", true,
                         encoder.quantizer.dist_edge_low),
        SHAPEDP_COUNT_KEY("resample_n", "points per outline after resampling (default 200)", encoder.resample_n),
        SHAPEDP_COUNT_KEY("sc_angular_bins", "shape context angular bins (default 12)", shape_context.angular_bins),
        SHAPEDP_REAL_KEY("sc_dummy_cost", "padding cost for unequal point counts (default 0.25)", true,
                         shape_context.dummy_cost),
        SHAPEDP_REAL_KEY("sc_r_inner", "inner log-polar radius over mean pairwise distance (default 0.125)", true,
                         shape_context.r_inner),
        SHAPEDP_REAL_KEY("sc_r_outer", "outer log-polar radius over mean pairwise distance (default 2)", true,
                         shape_context.r_outer),
        SHAPEDP_COUNT_KEY("sc_radial_bins", "shape context radial bins (default 5)", shape_context.radial_bins),
        SHAPEDP_REAL_KEY("score_gap", "gap score w (default -2)", false, scores.gap),
        SHAPEDP_REAL_KEY("score_match", "identical-symbol score (default 2)", false, scores.match),
        SHAPEDP_REAL_KEY("score_mismatch", "cross-family substitution score (default -2)", false, scores.mismatch),
        SHAPEDP_REAL_KEY("sec_line_eps", "smoothed turn below which a stretch is straight (default 1e-6)", true,
                         encoder.sections.line_eps),
        SHAPEDP_COUNT_KEY("sec_window", "moving-average window of the turn signal (default 5)", encoder.sections.window),
    };
    return table;
}

#undef SHAPEDP_COUNT_KEY
#undef SHAPEDP_REAL_KEY

const KeySpec& spec_for(std::string_view key) {
    for (const auto& s : specs()) {
        if (key == s.name) return s;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown config key '" + std::string(key) + "'");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

void RunConfig::set(std::string_view key, std::string_view value) { spec_for(key).set(*this, trim(value)); }

std::string RunConfig::get(std::string_view key) const { return spec_for(key).get(*this); }

std::map<std::string, std::string> RunConfig::values() const {
    std::map<std::string, std::string> out;
    for (const auto& s : specs()) out[s.name] = get(s.name);
    return out;
}

std::map<std::string, std::string> RunConfig::encoding_values() const {
    std::map<std::string, std::string> out;
    for (const auto& s : specs()) {
        if (s.encoding) out[s.name] = get(s.name);
    }
    return out;
}

std::string RunConfig::to_text() const {
    std::string out;
    for (const auto& [k, v] : values()) out += k + "=" + v + "\n";
    return out;
}

void RunConfig::merge_text(std::string_view text) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "config line " + std::to_string(line_no) + " has no '='");
        }
        set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
}

RunConfig RunConfig::from_text(std::string_view text) {
    RunConfig c;
    c.merge_text(text);
    return c;
}

std::string RunConfig::fingerprint() const {
    // FNV-1a over the sorted lines.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& [k, v] : encoding_values()) {
        for (char ch : k + "=" + v + "\n") {
            h ^= static_cast<unsigned char>(ch);
            h *= 0x100000001b3ULL;
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

void RunConfig::validate() const {
    encoder.validate();
    shape_context.validate();
}

const std::vector<ConfigKey>& config_keys() {
    static const std::vector<ConfigKey> keys = [] {
        std::vector<ConfigKey> out;
        for (const auto& s : specs()) out.push_back({s.name, s.help});
        return out;
    }();
    return keys;
}

}  // namespace shapedp
