#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace oomet {

enum class TokenKind {
    kIdentifier,
    kKeyword,
    kIntLiteral,
    kFloatLiteral,
    kStringLiteral,
    kCharLiteral,
    kPunct,  // operators and punctuation, text carries the spelling
    kEof,
};

struct Token {
    TokenKind kind = TokenKind::kEof;
    std::string text;
    int line = 1;
    int column = 1;

    bool is(TokenKind k) const { return kind == k; }
    bool is_keyword(std::string_view kw) const { return kind == TokenKind::kKeyword && text == kw; }
    bool is_punct(std::string_view p) const { return kind == TokenKind::kPunct && text == p; }
};

// Tokenizes the Java-like subset. Validates UTF-8 up front (EncodingError)
// and throws SyntaxError for characters outside the subset.
std::vector<Token> tokenize(const std::string& path, const std::string& content);

bool is_utf8(std::string_view bytes);

}  // namespace oomet
