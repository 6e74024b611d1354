#include "shapedp/eval.hpp"

#include "shapedp/error.hpp"

namespace shapedp {

Index build_index(std::span<const LabeledContour> shapes, const RunConfig& cfg, bool keep_outline) {
    cfg.validate();
    const std::string fp = cfg.fingerprint();
    Index index(fp);
    for (const auto& s : shapes) {
        Contour canon = canonical_frame(s.contour, cfg.encoder.resample_n);
        ShapeRecord r{s.id, s.label, encode_shape(canon, cfg.encoder), fp, std::nullopt};
        if (s.label.empty()) r.label.reset();
        if (keep_outline) r.contour = std::move(canon);
        index.add(std::move(r));
    }
    return index;
}

Index reencode_index(const Index& index, const RunConfig& cfg) {
    cfg.validate();
    const std::string fp = cfg.fingerprint();
    Index out(fp);
    for (const auto& r : index.records()) {
        if (!r.contour) throw Error(ErrorCode::InvalidArgument, "record '" + r.id + "' stores no outline to re-encode");
        out.add({r.id, r.label, encode_shape(*r.contour, cfg.encoder), fp, r.contour});
    }
    return out;
}

std::vector<SweepPoint> angle_bin_sweep(std::span<const LabeledContour> shapes, const RunConfig& base,
                                        std::span<const unsigned> bins, std::size_t depth, const QueryOptions& opt) {
    std::vector<SweepPoint> out;
    for (unsigned k : bins) {
        RunConfig cfg = base;
        cfg.encoder.quantizer.angle_bins = k;
        QueryOptions o = opt;
        o.scores = cfg.scores;
        out.push_back({k, bullseye(build_index(shapes, cfg), depth, o)});
    }
    return out;
}

std::vector<SweepPoint> angle_bin_sweep(const Index& index, const RunConfig& base, std::span<const unsigned> bins,
                                        std::size_t depth, const QueryOptions& opt) {
    std::vector<SweepPoint> out;
    for (unsigned k : bins) {
        RunConfig cfg = base;
        cfg.encoder.quantizer.angle_bins = k;
        QueryOptions o = opt;
        o.scores = cfg.scores;
        out.push_back({k, bullseye(reencode_index(index, cfg), depth, o)});
    }
    return out;
}

}  // namespace shapedp
