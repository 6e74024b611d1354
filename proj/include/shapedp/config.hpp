#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "shapedp/alignment.hpp"
#include "shapedp/encoding.hpp"
#include "shapedp/shape_context.hpp"

namespace shapedp {

/// All tunables of a run, stored as a flat key=value file.
struct RunConfig {
    EncoderConfig encoder;
    ScConfig shape_context;
    ScoreTable scores;

    /// Throws InvalidArgument for unknown keys or unparsable values.
    void set(std::string_view key, std::string_view value);
    std::string get(std::string_view key) const;

    /// Every key with its current value, sorted by key.
    std::map<std::string, std::string> values() const;
    /// Keys that change the produced signatures (all but the score table).
    std::map<std::string, std::string> encoding_values() const;

    std::string to_text() const;
    static RunConfig from_text(std::string_view text);
    void merge_text(std::string_view text);

    /// Stable hash of the sorted encoding key=value lines.
    std::string fingerprint() const;

    void validate() const;
};

struct ConfigKey {
    std::string name;
    std::string help;
};

/// Every recognised key, with its help text.
const std::vector<ConfigKey>& config_keys();

/// Shortest round-trip decimal form of a double.
std::string format_number(double v);

}  // namespace shapedp
