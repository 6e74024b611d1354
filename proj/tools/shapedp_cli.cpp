#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "shapedp/alignment.hpp"
#include "shapedp/config.hpp"
#include "shapedp/encoding.hpp"
#include "shapedp/error.hpp"
#include "shapedp/eval.hpp"
#include "shapedp/io.hpp"
#include "shapedp/retrieval.hpp"
#include "shapedp/shape_context.hpp"
#include "shapedp/synthetic.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace shapedp;

namespace {

// --config FILE plus one --<key> flag per config key.
struct ConfigFlags {
    std::string file;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;

    void attach(CLI::App* app) {
        app->add_option("--config", file, "key=value config file applied before individual flags");
        for (const auto& key : config_keys()) {
            options[key.name] = app->add_option("--" + key.name, values[key.name], key.help)->group("Config keys");
        }
    }

    RunConfig apply(RunConfig cfg) const {
        if (!file.empty()) cfg.merge_text(read_file(file));
        for (const auto& [k, opt] : options) {
            if (opt->count() > 0) cfg.set(k, values.at(k));
        }
        cfg.validate();
        return cfg;
    }
};

// Index commands start from the index's own config; flags may only touch
// keys that leave the signatures unchanged.
RunConfig index_config(const LoadedIndex& loaded, const ConfigFlags& flags) {
    const RunConfig cfg = flags.apply(loaded.config);
    if (cfg.fingerprint() != loaded.index.fingerprint()) {
        throw Error(ErrorCode::FingerprintMismatch,
                    "config flags change the encoding of an existing index (fingerprint " + cfg.fingerprint() +
                        " vs " + loaded.index.fingerprint() + "); rebuild the index instead");
    }
    return cfg;
}

LoadedIndex load_index(const std::string& path) { return index_from_json(read_file(path)); }

std::string tsv_field(std::string s) {
    for (char& c : s) {
        if (c == '\t' || c == '\n') c = ' ';
    }
    return s;
}

struct InputShape {
    std::string id;
    std::optional<std::string> label;
    fs::path file;
};

// manifest.tsv: header "id<TAB>label<TAB>file", file relative to the manifest.
std::vector<InputShape> read_manifest(const fs::path& path) {
    std::istringstream in(read_file(path));
    std::vector<InputShape> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#' || (line_no == 1 && line.rfind("id\t", 0) == 0)) continue;
        std::vector<std::string> cols;
        std::stringstream ls(line);
        std::string col;
        while (std::getline(ls, col, '\t')) cols.push_back(col);
        if (cols.size() != 3) {
            throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(line_no) + ": expected 3 columns");
        }
        InputShape s{cols[0], std::nullopt, path.parent_path() / cols[2]};
        if (!cols[1].empty() && cols[1] != "-") s.label = cols[1];
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<InputShape> gather_inputs(const std::vector<std::string>& files, const std::string& manifest) {
    std::vector<InputShape> out;
    if (!manifest.empty()) out = read_manifest(manifest);
    for (const auto& f : files) out.push_back({fs::path(f).stem().string(), std::nullopt, f});
    if (out.empty()) throw Error(ErrorCode::InvalidArgument, "no input shapes given");
    return out;
}

void add_shapes(Index& index, const std::vector<InputShape>& inputs, const RunConfig& cfg, bool keep_outline) {
    for (const auto& in : inputs) {
        Contour canon = canonical_frame(load_contour(in.file), cfg.encoder.resample_n);
        ShapeRecord r{in.id, in.label, encode_shape(canon, cfg.encoder), cfg.fingerprint(), std::nullopt};
        if (keep_outline) r.contour = std::move(canon);
        index.add(std::move(r));
    }
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
    } else {
        write_file_atomic(path, content);
    }
}

SymbolString read_symbols(const std::string& file, const std::string& text) {
    if (!file.empty() && !text.empty()) throw Error(ErrorCode::InvalidArgument, "give either a file or inline tokens");
    if (!file.empty()) return SymbolString(parse_tokens(read_file(file)));
    return SymbolString(parse_tokens(text));
}

json point_json(Point2 p) { return json::array({p.x, p.y}); }

// ---------------------------------------------------------------- encode

struct EncodeArgs {
    std::string input, out, dump_sectors, dump_sections;
    bool raw = false;
    ConfigFlags cfg;
};

int cmd_encode(const EncodeArgs& a) {
    const RunConfig cfg = a.cfg.apply({});
    const Contour loaded = load_contour(a.input);
    const Contour c = a.raw ? resample(loaded, cfg.encoder.resample_n) : canonical_frame(loaded, cfg.encoder.resample_n);
    const auto trace = encode_shape_traced(c, cfg.encoder);

    if (!a.dump_sectors.empty()) {
        json doc;
        doc["center"] = point_json(trace.circle.center);
        doc["radius"] = trace.circle.radius;
        doc["rings"] = cfg.encoder.arp.rings;
        doc["wedges"] = cfg.encoder.arp.wedges;
        json slices = json::array();
        for (const auto& s : trace.slices) {
            json runs = json::array();
            for (const auto& r : s.runs) runs.push_back({{"start", r.start}, {"length", r.length}});
            slices.push_back({{"ordinal", s.sector.ordinal}, {"ring", s.sector.ring}, {"wedge", s.sector.wedge},
                              {"runs", runs}});
        }
        doc["slices"] = slices;
        write_file_atomic(a.dump_sectors, doc.dump(1) + "\n");
    }
    if (!a.dump_sections.empty()) {
        json rows = json::array();
        for (const auto& e : trace.entries) {
            json toks = json::array();
            for (const auto& t : e.tokens) toks.push_back(t.name());
            rows.push_back({{"sector", e.sector.ordinal},
                            {"run", e.run},
                            {"kind", to_string(e.section.kind)},
                            {"points", e.section.points.size()},
                            {"first", point_json(e.section.first)},
                            {"last", point_json(e.section.last)},
                            {"area", e.section.area},
                            {"alpha", e.section.alpha},
                            {"degree", e.section.degree},
                            {"d1", e.section.d1},
                            {"d2", e.section.d2},
                            {"tokens", toks}});
        }
        write_file_atomic(a.dump_sections, rows.dump(1) + "\n");
    }
    emit(a.out, trace.symbols.str() + "\n");
    return 0;
}

// ----------------------------------------------------------------- align

struct AlignArgs {
    std::string a_file, b_file, a_text, b_text, dump_matrix;
    ConfigFlags cfg;
};

int cmd_align(const AlignArgs& args) {
    const RunConfig cfg = args.cfg.apply({});
    const auto a = read_symbols(args.a_file, args.a_text);
    const auto b = read_symbols(args.b_file, args.b_text);
    const auto f = nw_fill(a.tokens(), b.tokens(), cfg.scores);
    const auto al = traceback(f, a.tokens(), b.tokens(), cfg.scores);

    std::string row_a, row_b, row_s;
    for (const auto& op : al.ops) {
        std::string x = op.kind == OpKind::GapInA ? "-" : a.tokens()[op.i].name();
        std::string y = op.kind == OpKind::GapInB ? "-" : b.tokens()[op.j].name();
        const std::size_t w = std::max({x.size(), y.size(), format_number(op.score).size()});
        auto pad = [w](std::string s) { return s + std::string(w - s.size() + 1, ' '); };
        row_a += pad(x);
        row_b += pad(y);
        row_s += pad(format_number(op.score));
    }
    std::cout << "score\t" << format_number(al.score) << "\n";
    std::cout << "normalized\t" << format_number(al.normalized) << "\n";
    auto rstrip = [](std::string s) { return s.substr(0, s.find_last_not_of(' ') + 1); };
    std::cout << "a\t" << rstrip(row_a) << "\n" << "b\t" << rstrip(row_b) << "\n" << "pair\t" << rstrip(row_s) << "\n";

    if (!args.dump_matrix.empty()) {
        std::string tsv = "\t-";
        for (const auto& t : b.tokens()) tsv += "\t" + t.name();
        tsv += "\n";
        for (std::size_t i = 0; i < f.rows(); ++i) {
            tsv += i == 0 ? "-" : a.tokens()[i - 1].name();
            for (std::size_t j = 0; j < f.cols(); ++j) tsv += "\t" + format_number(f(i, j));
            tsv += "\n";
        }
        write_file_atomic(args.dump_matrix, tsv);
    }
    return 0;
}

// ----------------------------------------------------------------- match

struct MatchArgs {
    std::string a, b, trace;
    ConfigFlags cfg;
};

int cmd_match(const MatchArgs& args) {
    const RunConfig cfg = args.cfg.apply({});
    const Contour a = canonical_frame(load_contour(args.a), cfg.encoder.resample_n);
    const Contour b = canonical_frame(load_contour(args.b), cfg.encoder.resample_n);
    const auto pair = align_pair(a, b, cfg.shape_context);
    const auto sa = encode_shape(a, cfg.encoder);
    const auto sb = encode_shape(pair.aligned, cfg.encoder);
    const double sim = similarity(sa, sb, cfg.scores);

    std::cout << "similarity\t" << format_number(sim) << "\n";
    std::cout << "residual\t" << format_number(pair.residual) << "\n";
    std::cout << "a\t" << sa.str() << "\n" << "b\t" << sb.str() << "\n";

    if (!args.trace.empty()) {
        json pairs = json::array();
        for (auto [i, j] : pair.correspondence.pairs) pairs.push_back(json::array({i, j}));
        json doc;
        doc["pairs"] = pairs;
        doc["transform"] = {{"rotation", pair.transform.rotation},
                            {"scale", pair.transform.scale},
                            {"translation", point_json(pair.transform.translation)}};
        doc["residual"] = pair.residual;
        doc["initial_residual"] = pair.initial_residual;
        doc["refined"] = pair.refined;
        write_file_atomic(args.trace, doc.dump(1) + "\n");
    }
    return 0;
}

// ----------------------------------------------------------------- index

struct IndexArgs {
    std::string out, index, manifest;
    std::vector<std::string> files;
    bool keep_outline = false;
    ConfigFlags cfg;
};

int cmd_index_build(const IndexArgs& a) {
    const RunConfig cfg = a.cfg.apply({});
    Index index(cfg.fingerprint());
    add_shapes(index, gather_inputs(a.files, a.manifest), cfg, a.keep_outline);
    write_file_atomic(a.out, index_to_json(index, cfg));
    std::cout << "records\t" << index.size() << "\nfingerprint\t" << index.fingerprint() << "\n";
    return 0;
}

int cmd_index_add(const IndexArgs& a) {
    auto loaded = load_index(a.index);
    const RunConfig cfg = index_config(loaded, a.cfg);
    add_shapes(loaded.index, gather_inputs(a.files, a.manifest), cfg, a.keep_outline);
    write_file_atomic(a.out.empty() ? a.index : a.out, index_to_json(loaded.index, cfg));
    std::cout << "records\t" << loaded.index.size() << "\n";
    return 0;
}

int cmd_index_info(const IndexArgs& a) {
    const auto loaded = load_index(a.index);
    std::map<std::string, std::size_t> classes;
    std::size_t outlines = 0, unlabeled = 0;
    for (const auto& r : loaded.index.records()) {
        if (r.label) ++classes[*r.label];
        else ++unlabeled;
        outlines += r.contour ? 1 : 0;
    }
    std::cout << "version\t" << kIndexFormatVersion << "\n";
    std::cout << "fingerprint\t" << loaded.index.fingerprint() << "\n";
    std::cout << "records\t" << loaded.index.size() << "\n";
    std::cout << "outlines\t" << outlines << "\n";
    std::cout << "unlabeled\t" << unlabeled << "\n";
    for (const auto& [label, n] : classes) std::cout << "class\t" << label << "\t" << n << "\n";
    for (const auto& [k, v] : loaded.config.values()) std::cout << "config\t" << k << "\t" << v << "\n";
    return 0;
}

// ----------------------------------------------------------------- query

struct QueryArgs {
    std::string index, contour, out;
    std::size_t k = 10;
    bool pairwise = false, prefilter = false;
    unsigned threads = 0;
    ConfigFlags cfg;
};

int cmd_query(const QueryArgs& a) {
    const auto loaded = load_index(a.index);
    const RunConfig cfg = index_config(loaded, a.cfg);
    QueryOptions opt;
    opt.scores = cfg.scores;
    opt.length_prefilter = a.prefilter;
    opt.threads = a.threads;
    const Contour q = load_contour(a.contour);
    const auto hits = a.pairwise ? query_topk_pairwise(loaded.index, q, a.k, cfg.encoder, cfg.shape_context, opt)
                                 : query_topk(loaded.index, encode_canonical(q, cfg.encoder), a.k, opt);
    std::string tsv = "rank\tid\tlabel\tsimilarity\n";
    for (const auto& h : hits) {
        tsv += std::to_string(h.rank) + "\t" + tsv_field(h.id) + "\t" + (h.label ? tsv_field(*h.label) : "-") + "\t" +
               format_number(h.similarity) + "\n";
    }
    emit(a.out, tsv);
    return 0;
}

// ------------------------------------------------------------------ eval

struct EvalArgs {
    std::string index, dataset, report, svg, k_sweep;
    std::size_t depth = 0;
    unsigned threads = 0;
    ConfigFlags cfg;
};

std::vector<unsigned> parse_bins(const std::string& text) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 1) throw std::invalid_argument(item);
            out.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "--k-sweep expects positive integers like 3,5,6, got '" + item + "'");
        }
    }
    if (out.empty()) throw Error(ErrorCode::InvalidArgument, "--k-sweep is empty");
    return out;
}

// Per-query rows: where every same-class record lands in the full ranking.
std::string eval_rows(const Index& index, const BullseyeReport& rep, const QueryOptions& opt) {
    std::string tsv = "query\tlabel\thits\tclass_ranks\n";
    for (std::size_t q = 0; q < index.size(); ++q) {
        const auto& rec = index.records()[q];
        const auto hits = query_topk(index, rec.symbols, index.size(), opt);
        std::string ranks;
        for (std::size_t pos = 0; pos < hits.size(); ++pos) {
            if (hits[pos].label == rec.label) ranks += (ranks.empty() ? "" : ",") + std::to_string(pos + 1);
        }
        tsv += tsv_field(rec.id) + "\t" + tsv_field(*rec.label) + "\t" + std::to_string(rep.rows[q].hits) + "\t" +
               ranks + "\n";
    }
    return tsv;
}

std::string bar_svg(const std::vector<std::pair<std::string, double>>& bars, const std::string& title) {
    const int w = 80 * static_cast<int>(bars.size()) + 80, h = 260, base = 220;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    s << "<text x=\"10\" y=\"18\" font-family=\"sans-serif\" font-size=\"13\">" << title << "</text>\n";
    s << "<line x1=\"40\" y1=\"" << base << "\" x2=\"" << w - 20 << "\" y2=\"" << base << "\" stroke=\"black\"/>\n";
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const double bh = 180.0 * std::clamp(bars[i].second, 0.0, 1.0);
        const int x = 60 + 80 * static_cast<int>(i);
        s << "<rect x=\"" << x << "\" y=\"" << base - bh << "\" width=\"50\" height=\"" << bh
          << "\" fill=\"#4a7ab5\"/>\n";
        s << "<text x=\"" << x << "\" y=\"" << base + 16 << "\" font-family=\"sans-serif\" font-size=\"12\">"
          << bars[i].first << "</text>\n";
        s << "<text x=\"" << x << "\" y=\"" << base - bh - 4 << "\" font-family=\"sans-serif\" font-size=\"11\">"
          << format_number(std::round(bars[i].second * 1e4) / 1e4) << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

int cmd_eval(const EvalArgs& a) {
    if (a.index.empty() == a.dataset.empty()) throw Error(ErrorCode::InvalidArgument, "give exactly one of --index or --dataset");
    RunConfig cfg;
    Index index;
    if (!a.index.empty()) {
        const auto loaded = load_index(a.index);
        cfg = index_config(loaded, a.cfg);
        index = loaded.index;
    } else {
        cfg = a.cfg.apply({});
        index = Index(cfg.fingerprint());
        add_shapes(index, read_manifest(fs::path(a.dataset) / "manifest.tsv"), cfg, true);
    }
    QueryOptions opt;
    opt.scores = cfg.scores;
    opt.threads = a.threads;

    std::string tsv;
    std::vector<std::pair<std::string, double>> bars;
    if (a.k_sweep.empty()) {
        const auto rep = bullseye(index, a.depth, opt);
        tsv = eval_rows(index, rep, opt);
        tsv += "# bullseye\t" + format_number(rep.score) + "\tdepth\t" + std::to_string(rep.depth) + "\tclass_size\t" +
               std::to_string(rep.class_size) + "\trecords\t" + std::to_string(index.size()) + "\n";
        std::map<std::string, std::pair<std::size_t, std::size_t>> per_class;
        for (const auto& row : rep.rows) {
            per_class[row.label].first += row.hits;
            per_class[row.label].second += rep.class_size;
        }
        for (const auto& [label, hv] : per_class) {
            bars.emplace_back(label, static_cast<double>(hv.first) / static_cast<double>(hv.second));
        }
        std::cout << "bullseye\t" << format_number(rep.score) << "\n";
    } else {
        const auto bins = parse_bins(a.k_sweep);
        const auto sweep = angle_bin_sweep(index, cfg, bins, a.depth, opt);
        tsv = "angle_bins\tbullseye\tdepth\tclass_size\n";
        for (const auto& p : sweep) {
            tsv += std::to_string(p.angle_bins) + "\t" + format_number(p.report.score) + "\t" +
                   std::to_string(p.report.depth) + "\t" + std::to_string(p.report.class_size) + "\n";
            bars.emplace_back("K=" + std::to_string(p.angle_bins), p.report.score);
            std::cout << "bullseye\tK=" << p.angle_bins << "\t" << format_number(p.report.score) << "\n";
        }
    }
    if (!a.report.empty()) write_file_atomic(a.report, tsv);
    if (!a.svg.empty()) write_file_atomic(a.svg, bar_svg(bars, a.k_sweep.empty() ? "bulls-eye by class" : "bulls-eye by angle bins"));
    return 0;
}

// ------------------------------------------------------------------- gen

struct GenArgs {
    std::string out;
    SyntheticParams params;
};

int cmd_gen(const GenArgs& a) {
    const auto shapes = gen_synthetic(a.params);
    fs::create_directories(a.out);
    std::string manifest = "id\tlabel\tfile\n";
    for (const auto& s : shapes) {
        const std::string file = s.id + ".json";
        write_file_atomic(fs::path(a.out) / file, contour_to_json(s.contour));
        manifest += s.id + "\t" + s.label + "\t" + file + "\n";
    }
    write_file_atomic(fs::path(a.out) / "manifest.tsv", manifest);
    std::cout << "shapes\t" << shapes.size() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shapedp: contour shape signatures, alignment and retrieval"};
    app.require_subcommand(1);
    std::function<int()> action;

    EncodeArgs enc;
    auto* c_enc = app.add_subcommand("encode", "encode a contour or mask file as a symbol string");
    c_enc->add_option("input", enc.input, "contour JSON, mask JSON or PGM")->required()->check(CLI::ExistingFile);
    c_enc->add_option("-o,--out", enc.out, "symbol file (default stdout)");
    c_enc->add_option("--dump-sectors", enc.dump_sectors, "write the ARP slices as JSON");
    c_enc->add_option("--dump-sections", enc.dump_sections, "write per-section features as JSON");
    c_enc->add_flag("--raw", enc.raw, "encode the resampled input as given instead of its canonical frame");
    enc.cfg.attach(c_enc);
    c_enc->callback([&] { action = [&] { return cmd_encode(enc); }; });

    AlignArgs al;
    auto* c_al = app.add_subcommand("align", "align two symbol strings");
    c_al->add_option("--a", al.a_file, "first symbol file")->check(CLI::ExistingFile);
    c_al->add_option("--b", al.b_file, "second symbol file")->check(CLI::ExistingFile);
    c_al->add_option("--a-tokens", al.a_text, "first string inline, e.g. \"S S1 S2 A1 D1\"");
    c_al->add_option("--b-tokens", al.b_text, "second string inline");
    c_al->add_option("--dump-matrix", al.dump_matrix, "write the score grid as TSV");
    al.cfg.attach(c_al);
    c_al->callback([&] { action = [&] { return cmd_align(al); }; });

    MatchArgs ma;
    auto* c_ma = app.add_subcommand("match", "align two contours and compare their signatures");
    c_ma->add_option("a", ma.a, "reference contour")->required()->check(CLI::ExistingFile);
    c_ma->add_option("b", ma.b, "contour aligned onto the reference")->required()->check(CLI::ExistingFile);
    c_ma->add_option("--trace", ma.trace, "write correspondences and transform as JSON");
    ma.cfg.attach(c_ma);
    c_ma->callback([&] { action = [&] { return cmd_match(ma); }; });

    IndexArgs ixb, ixa, ixi;
    auto* c_ix = app.add_subcommand("index", "build, extend or inspect an index");
    c_ix->require_subcommand(1);
    auto* c_build = c_ix->add_subcommand("build", "encode shapes into a new index");
    c_build->add_option("-o,--out", ixb.out, "index file")->required();
    c_build->add_option("--manifest", ixb.manifest, "TSV of id, label, file")->check(CLI::ExistingFile);
    c_build->add_option("files", ixb.files, "contour or mask files (id = file stem, unlabeled)")->check(CLI::ExistingFile);
    c_build->add_flag("--keep-outline", ixb.keep_outline, "store canonical outlines (pairwise queries, angle-bin sweeps)");
    ixb.cfg.attach(c_build);
    c_build->callback([&] { action = [&] { return cmd_index_build(ixb); }; });
    auto* c_add = c_ix->add_subcommand("add", "append shapes to an index");
    c_add->add_option("index", ixa.index, "index file")->required()->check(CLI::ExistingFile);
    c_add->add_option("-o,--out", ixa.out, "write here instead of updating in place");
    c_add->add_option("--manifest", ixa.manifest, "TSV of id, label, file")->check(CLI::ExistingFile);
    c_add->add_option("files", ixa.files, "contour or mask files")->check(CLI::ExistingFile);
    c_add->add_flag("--keep-outline", ixa.keep_outline, "store canonical outlines");
    ixa.cfg.attach(c_add);
    c_add->callback([&] { action = [&] { return cmd_index_add(ixa); }; });
    auto* c_info = c_ix->add_subcommand("info", "summarize an index");
    c_info->add_option("index", ixi.index, "index file")->required()->check(CLI::ExistingFile);
    c_info->callback([&] { action = [&] { return cmd_index_info(ixi); }; });

    QueryArgs qa;
    auto* c_q = app.add_subcommand("query", "rank index records against a contour");
    c_q->add_option("index", qa.index, "index file")->required()->check(CLI::ExistingFile);
    c_q->add_option("contour", qa.contour, "query contour or mask")->required()->check(CLI::ExistingFile);
    c_q->add_option("-k", qa.k, "number of hits")->capture_default_str()->check(CLI::PositiveNumber);
    c_q->add_option("-o,--out", qa.out, "ranked TSV (default stdout)");
    c_q->add_flag("--pairwise-align", qa.pairwise, "align the query onto each stored outline before encoding");
    c_q->add_flag("--prefilter", qa.prefilter, "skip records whose length bound cannot reach the top k");
    c_q->add_option("--threads", qa.threads, "worker threads (0 = all cores)");
    qa.cfg.attach(c_q);
    c_q->callback([&] { action = [&] { return cmd_query(qa); }; });

    EvalArgs ev;
    auto* c_ev = app.add_subcommand("eval", "bulls-eye evaluation");
    c_ev->add_option("--index", ev.index, "labeled index file")->check(CLI::ExistingFile);
    c_ev->add_option("--dataset", ev.dataset, "directory written by `gen`")->check(CLI::ExistingDirectory);
    c_ev->add_option("--depth", ev.depth, "ranks counted per query (0 = twice the class size)")->capture_default_str();
    c_ev->add_option("--k-sweep", ev.k_sweep, "comma separated angle-bin counts, e.g. 3,5,6");
    c_ev->add_option("--report", ev.report, "TSV report file");
    c_ev->add_option("--svg", ev.svg, "bar chart of the scores");
    c_ev->add_option("--threads", ev.threads, "worker threads (0 = all cores)");
    ev.cfg.attach(c_ev);
    c_ev->callback([&] { action = [&] { return cmd_eval(ev); }; });

    GenArgs gen;
    auto* c_gen = app.add_subcommand("gen", "write a synthetic labeled dataset");
    c_gen->add_option("-o,--out", gen.out, "output directory")->required();
    c_gen->add_option("--classes", gen.params.class_count, "number of classes")->capture_default_str()->check(CLI::PositiveNumber);
    c_gen->add_option("--per-class", gen.params.per_class, "instances per class")->capture_default_str()->check(CLI::PositiveNumber);
    c_gen->add_option("--noise", gen.params.noise_level, "radial jitter as a fraction of the radius")->capture_default_str()->check(CLI::NonNegativeNumber);
    c_gen->add_option("--points", gen.params.points, "samples per outline")->capture_default_str()->check(CLI::Range(3, 1 << 20));
    c_gen->add_option("--seed", gen.params.seed, "random seed")->capture_default_str();
    c_gen->callback([&] { action = [&] { return cmd_gen(gen); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "shapedp: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "shapedp: " << e.what() << "\n";
        return 1;
    }
}
