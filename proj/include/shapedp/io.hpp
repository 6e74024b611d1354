#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "shapedp/config.hpp"
#include "shapedp/contour.hpp"
#include "shapedp/mask.hpp"
#include "shapedp/retrieval.hpp"

namespace shapedp {

std::string read_file(const std::filesystem::path& path);
/// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// {"points": [[x, y], ...], "closed": true}
Contour parse_contour_json(std::string_view text);
std::string contour_to_json(const Contour& contour);

/// Binary PGM (P5) or ASCII PGM (P2); a pixel is foreground when >= 128.
BinaryMask parse_pgm(std::string_view bytes);
/// {"width": W, "height": H, "rows": [[0, 1, ...], ...]} with 0/1 or booleans.
BinaryMask parse_mask_json(std::string_view text);

/// Contour from a contour JSON, a mask JSON, or a PGM file (traced).
Contour load_contour(const std::filesystem::path& path);

std::string index_to_json(const Index& index, const RunConfig& config);
struct LoadedIndex {
    Index index;
    RunConfig config;
};
LoadedIndex index_from_json(std::string_view text);

}  // namespace shapedp
