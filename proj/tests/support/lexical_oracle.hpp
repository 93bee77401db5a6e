#pragma once

// Independent decision-construct counter used to cross-check the parser's
// cyclomatic counts. Deliberately does not share any code with the real
// lexer: a minimal scan that skips comments and string/char literals, then
// counts decision keywords at word granularity plus ?, && and ||.
//
// Loop counting rule: every loop construct contains exactly one `for` or
// `while` keyword (do-while contributes its trailing `while`), so loops =
// #for + #while and `do` itself is ignored.

#include <cctype>
#include <string>
#include <string_view>

namespace oomet::testsupport {

struct LexicalCounts {
    int ifs = 0;
    int loops = 0;
    int cases = 0;
    int catches = 0;
    int ternaries = 0;
    int ands = 0;
    int ors = 0;

    int total() const { return ifs + loops + cases + catches + ternaries + ands + ors; }
};

inline LexicalCounts count_decision_constructs(std::string_view text) {
    LexicalCounts counts;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto word_char = [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
    };

    while (i < n) {
        const char c = text[i];
        if (c == '/' && i + 1 < n && text[i + 1] == '/') {
            while (i < n && text[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && i + 1 < n && text[i + 1] == '*') {
            i += 2;
            while (i + 1 < n && !(text[i] == '*' && text[i + 1] == '/')) ++i;
            i += 2;
            continue;
        }
        if (c == '"' || c == '\'') {
            const char quote = c;
            ++i;
            while (i < n && text[i] != quote) {
                if (text[i] == '\\') ++i;
                ++i;
            }
            ++i;
            continue;
        }
        if (word_char(c)) {
            std::size_t start = i;
            while (i < n && word_char(text[i])) ++i;
            const std::string_view word = text.substr(start, i - start);
            if (word == "if") ++counts.ifs;
            else if (word == "for" || word == "while") ++counts.loops;
            else if (word == "case") ++counts.cases;
            else if (word == "catch") ++counts.catches;
            continue;
        }
        if (c == '?') ++counts.ternaries;
        if (c == '&' && i + 1 < n && text[i + 1] == '&') {
            ++counts.ands;
            ++i;
        }
        if (c == '|' && i + 1 < n && text[i + 1] == '|') {
            ++counts.ors;
            ++i;
        }
        ++i;
    }
    return counts;
}

}  // namespace oomet::testsupport
