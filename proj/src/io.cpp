#include "shapedp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>
#include <unistd.h>

#include "shapedp/error.hpp"

namespace shapedp {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw Error(ErrorCode::IoError, "write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error(ErrorCode::IoError, "cannot rename onto '" + path.string() + "': " + ec.message());
    }
}

namespace {

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
    }
}

std::vector<Point2> points_from_json(const json& arr) {
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, "\"points\" must be an array");
    std::vector<Point2> pts;
    pts.reserve(arr.size());
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            throw Error(ErrorCode::ParseError, "each point must be [x, y]");
        }
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return pts;
}

json points_to_json(const Contour& c) {
    json arr = json::array();
    for (const auto& p : c.points()) arr.push_back({p.x, p.y});
    return arr;
}

BinaryMask mask_from_json(const json& doc) {
    if (!doc.contains("rows") || !doc["rows"].is_array()) throw Error(ErrorCode::ParseError, "mask JSON needs \"rows\"");
    const auto& rows = doc["rows"];
    const std::size_t h = rows.size();
    const std::size_t w = h > 0 ? rows[0].size() : 0;
    if (doc.contains("width") && doc["width"].get<std::size_t>() != w) throw Error(ErrorCode::ParseError, "mask width mismatch");
    if (doc.contains("height") && doc["height"].get<std::size_t>() != h) throw Error(ErrorCode::ParseError, "mask height mismatch");
    std::vector<bool> bits;
    bits.reserve(w * h);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != w) throw Error(ErrorCode::ParseError, "mask rows must have equal length");
        for (const auto& v : row) {
            if (v.is_boolean()) bits.push_back(v.get<bool>());
            else if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) bits.push_back(v.get<int>() == 1);
            else throw Error(ErrorCode::ParseError, "mask cells must be 0/1 or booleans");
        }
    }
    return BinaryMask(w, h, std::move(bits));
}

}  // namespace

Contour parse_contour_json(std::string_view text) {
    const auto doc = parse_json(text, "contour JSON");
    if (!doc.is_object() || !doc.contains("points")) throw Error(ErrorCode::ParseError, "contour JSON needs \"points\"");
    if (doc.contains("closed") && !doc["closed"].get<bool>()) {
        throw Error(ErrorCode::ParseError, "only closed contours are supported");
    }
    return Contour(points_from_json(doc["points"]));
}

std::string contour_to_json(const Contour& contour) {
    json doc;
    doc["points"] = points_to_json(contour);
    doc["closed"] = true;
    return doc.dump() + "\n";
}

BinaryMask parse_mask_json(std::string_view text) { return mask_from_json(parse_json(text, "mask JSON")); }

BinaryMask parse_pgm(std::string_view bytes) {
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < bytes.size()) {
            if (bytes[pos] == '#') {
                while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
            } else if (std::isspace(static_cast<unsigned char>(bytes[pos]))) {
                ++pos;
            } else {
                break;
            }
        }
    };
    auto read_uint = [&]() -> std::size_t {
        skip_space();
        std::size_t v = 0;
        const std::size_t begin = pos;
        while (pos < bytes.size() && std::isdigit(static_cast<unsigned char>(bytes[pos]))) v = v * 10 + static_cast<std::size_t>(bytes[pos++] - '0');
        if (pos == begin) throw Error(ErrorCode::ParseError, "malformed PGM header");
        return v;
    };

    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
        throw Error(ErrorCode::ParseError, "not a P2/P5 PGM file");
    }
    const bool binary = bytes[1] == '5';
    pos = 2;
    const std::size_t w = read_uint();
    const std::size_t h = read_uint();
    const std::size_t maxval = read_uint();
    if (w == 0 || h == 0 || maxval == 0 || maxval > 65535) throw Error(ErrorCode::ParseError, "bad PGM dimensions");

    std::vector<bool> bits;
    bits.reserve(w * h);
    if (binary) {
        ++pos;  // single whitespace after maxval
        const std::size_t bpp = maxval < 256 ? 1 : 2;
        if (bytes.size() < pos + w * h * bpp) throw Error(ErrorCode::ParseError, "truncated PGM raster");
        for (std::size_t i = 0; i < w * h; ++i) {
            std::size_t v = static_cast<unsigned char>(bytes[pos + i * bpp]);
            if (bpp == 2) v = (v << 8) | static_cast<unsigned char>(bytes[pos + i * bpp + 1]);
            bits.push_back(v >= 128);
        }
    } else {
        for (std::size_t i = 0; i < w * h; ++i) bits.push_back(read_uint() >= 128);
    }
    return BinaryMask(w, h, std::move(bits));
}

Contour load_contour(const std::filesystem::path& path) {
    const std::string content = read_file(path);
    if (content.size() >= 2 && content[0] == 'P' && (content[1] == '5' || content[1] == '2')) {
        return trace_boundary(parse_pgm(content));
    }
    const auto doc = parse_json(content, path.string().c_str());
    if (doc.is_object() && doc.contains("points")) return Contour(points_from_json(doc["points"]));
    if (doc.is_object() && doc.contains("rows")) return trace_boundary(mask_from_json(doc));
    throw Error(ErrorCode::ParseError, "'" + path.string() + "' is neither a contour nor a mask");
}

std::string index_to_json(const Index& index, const RunConfig& config) {
    json doc;
    doc["version"] = kIndexFormatVersion;
    doc["fingerprint"] = index.fingerprint();
    json cfg = json::object();
    for (const auto& [k, v] : config.values()) cfg[k] = v;
    doc["config"] = cfg;
    json records = json::array();
    for (const auto& r : index.records()) {
        json rec;
        rec["id"] = r.id;
        rec["label"] = r.label ? json(*r.label) : json(nullptr);
        json tokens = json::array();
        for (const auto& t : r.symbols.tokens()) tokens.push_back(t.name());
        rec["tokens"] = tokens;
        if (r.contour) rec["points"] = points_to_json(*r.contour);
        records.push_back(rec);
    }
    doc["records"] = records;
    return doc.dump(1) + "\n";
}

LoadedIndex index_from_json(std::string_view text) {
    const auto doc = parse_json(text, "index JSON");
    try {
        if (doc.at("version").get<int>() != kIndexFormatVersion) {
            throw Error(ErrorCode::ParseError, "unsupported index version " + doc.at("version").dump());
        }
        RunConfig config;
        if (doc.contains("config")) {
            for (const auto& [k, v] : doc["config"].items()) config.set(k, v.get<std::string>());
        }
        const auto fingerprint = doc.at("fingerprint").get<std::string>();
        if (doc.contains("config") && config.fingerprint() != fingerprint) {
            throw Error(ErrorCode::FingerprintMismatch, "index config does not hash to its fingerprint");
        }
        Index index(fingerprint);
        for (const auto& rec : doc.at("records")) {
            ShapeRecord r;
            r.id = rec.at("id").get<std::string>();
            if (rec.contains("label") && !rec["label"].is_null()) r.label = rec["label"].get<std::string>();
            std::vector<Token> tokens;
            for (const auto& t : rec.at("tokens")) tokens.push_back(Token::parse(t.get<std::string>()));
            r.symbols = SymbolString(std::move(tokens));
            r.fingerprint = fingerprint;
            if (rec.contains("points")) r.contour = Contour(points_from_json(rec["points"]));
            index.add(std::move(r));
        }
        return {std::move(index), config};
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("index JSON: ") + e.what());
    }
}

}  // namespace shapedp
