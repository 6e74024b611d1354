#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shapedp {

/// Quintuple slot order: area, first distance, second distance, angle, degree.
enum class Family { Area, Dist1, Dist2, Angle, Degree };

inline constexpr std::size_t kGroupSize = 5;

/// One symbol. Ranks start at 1: S/L are area 1/2, S1/M1/L1 are dist1 1..3,
/// S2/M2/L2 are dist2 1..3, A1..AK are angle 1..K, D1/D2 are degree 1/2.
struct Token {
    Family family = Family::Area;
    unsigned rank = 1;

    friend bool operator==(const Token&, const Token&) = default;

    std::string name() const;
    static Token parse(std::string_view name);
};

namespace tok {
inline constexpr Token S{Family::Area, 1};
inline constexpr Token L{Family::Area, 2};
inline constexpr Token S1{Family::Dist1, 1};
inline constexpr Token M1{Family::Dist1, 2};
inline constexpr Token L1{Family::Dist1, 3};
inline constexpr Token S2{Family::Dist2, 1};
inline constexpr Token M2{Family::Dist2, 2};
inline constexpr Token L2{Family::Dist2, 3};
inline constexpr Token D1{Family::Degree, 1};
inline constexpr Token D2{Family::Degree, 2};
constexpr Token A(unsigned k) { return {Family::Angle, k}; }
}  // namespace tok

/// Whitespace separated names; "|" separators are skipped.
std::vector<Token> parse_tokens(std::string_view text);
std::string format_tokens(std::span<const Token> tokens);

/// A shape signature: a sequence of quintuples whose slots follow Family order.
class SymbolString {
public:
    SymbolString() = default;
    explicit SymbolString(std::vector<Token> tokens);

    static SymbolString parse(std::string_view text);

    std::span<const Token> tokens() const noexcept { return tokens_; }
    std::size_t size() const noexcept { return tokens_.size(); }
    std::size_t groups() const noexcept { return tokens_.size() / kGroupSize; }
    bool empty() const noexcept { return tokens_.empty(); }

    /// Canonical text: quintuples joined by " | ".
    std::string str() const;

    friend bool operator==(const SymbolString&, const SymbolString&) = default;

private:
    std::vector<Token> tokens_;
};

}  // namespace shapedp
