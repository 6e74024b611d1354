#include "shapedp/tokens.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "shapedp/error.hpp"

namespace shapedp {

std::string Token::name() const {
    switch (family) {
        case Family::Area: return rank == 1 ? "S" : "L";
        case Family::Dist1: return std::string(1, "SML"[rank - 1]) + "1";
        case Family::Dist2: return std::string(1, "SML"[rank - 1]) + "2";
        case Family::Angle: return "A" + std::to_string(rank);
        case Family::Degree: return "D" + std::to_string(rank);
    }
    return "?";
}

Token Token::parse(std::string_view name) {
    auto bad = [&] { return Error(ErrorCode::ParseError, "unknown token '" + std::string(name) + "'"); };
    if (name == "S") return tok::S;
    if (name == "L") return tok::L;
    if (name.size() == 2 && (name[1] == '1' || name[1] == '2')) {
        const Family f = name[1] == '1' ? Family::Dist1 : Family::Dist2;
        switch (name[0]) {
            case 'S': return {f, 1};
            case 'M': return {f, 2};
            case 'L': return {f, 3};
            case 'D': return {Family::Degree, name[1] == '1' ? 1u : 2u};
            default: break;
        }
    }
    if (name.size() >= 2 && name[0] == 'A') {
        unsigned k = 0;
        const auto* end = name.data() + name.size();
        const auto [ptr, ec] = std::from_chars(name.data() + 1, end, k);
        if (ec == std::errc() && ptr == end && k >= 1) return tok::A(k);
    }
    throw bad();
}

std::vector<Token> parse_tokens(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '|')) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '|') ++j;
        if (j > i) out.push_back(Token::parse(text.substr(i, j - i)));
        i = j;
    }
    return out;
}

std::string format_tokens(std::span<const Token> tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out += ' ';
        out += tokens[i].name();
    }
    return out;
}

SymbolString::SymbolString(std::vector<Token> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.size() % kGroupSize != 0) {
        throw Error(ErrorCode::InvalidArgument, "symbol string length is not a multiple of 5");
    }
    static constexpr Family order[kGroupSize] = {Family::Area, Family::Dist1, Family::Dist2, Family::Angle,
                                                 Family::Degree};
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (tokens_[i].family != order[i % kGroupSize]) {
            throw Error(ErrorCode::InvalidArgument,
                        "token " + std::to_string(i) + " (" + tokens_[i].name() + ") is out of quintuple order");
        }
    }
}

SymbolString SymbolString::parse(std::string_view text) { return SymbolString(parse_tokens(text)); }

std::string SymbolString::str() const {
    std::string out;
    for (std::size_t g = 0; g < groups(); ++g) {
        if (g > 0) out += " | ";
        out += format_tokens(tokens().subspan(g * kGroupSize, kGroupSize));
    }
    return out;
}

}  // namespace shapedp
