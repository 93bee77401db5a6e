#include "oomet/lexer.hpp"

#include <cctype>
#include <set>

#include "oomet/errors.hpp"

namespace oomet {

namespace {

const std::set<std::string_view> kKeywords = {
    "class",  "extends",  "package", "import",  "if",      "else",   "for",
    "while",  "do",       "switch",  "case",    "default", "break",  "continue",
    "return", "try",      "catch",   "finally", "new",     "this",   "super",
    "true",   "false",    "null",    "public",  "private", "protected",
    "static", "final",    "abstract",
};

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_part(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

class Cursor {
  public:
    Cursor(const std::string& path, const std::string& text) : path_(path), text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    int line() const { return line_; }
    int column() const { return column_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(path_, line_, column_, msg);
    }

  private:
    const std::string& path_;
    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

}  // namespace

bool is_utf8(std::string_view bytes) {
    std::size_t i = 0;
    while (i < bytes.size()) {
        const unsigned char c = static_cast<unsigned char>(bytes[i]);
        std::size_t len;
        unsigned cp_min;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            len = 1;
            cp_min = 0x80;
        } else if ((c & 0xF0) == 0xE0) {
            len = 2;
            cp_min = 0x800;
        } else if ((c & 0xF8) == 0xF0) {
            len = 3;
            cp_min = 0x10000;
        } else {
            return false;
        }
        if (i + len >= bytes.size()) return false;  // continuation bytes missing
        unsigned cp = c & (0x3F >> len);
        for (std::size_t k = 1; k <= len; ++k) {
            const unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        if (cp < cp_min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return false;
        i += len + 1;
    }
    return true;
}

std::vector<Token> tokenize(const std::string& path, const std::string& content) {
    if (!is_utf8(content))
        throw EncodingError(path + ": input is not valid UTF-8");

    Cursor cur(path, content);
    std::vector<Token> out;

    auto push = [&](TokenKind kind, std::string text, int line, int col) {
        out.push_back(Token{kind, std::move(text), line, col});
    };

    while (!cur.eof()) {
        const char c = cur.peek();

        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f') {
            cur.advance();
            continue;
        }

        // comments
        if (c == '/' && cur.peek(1) == '/') {
            while (!cur.eof() && cur.peek() != '\n') cur.advance();
            continue;
        }
        if (c == '/' && cur.peek(1) == '*') {
            const int line = cur.line(), col = cur.column();
            cur.advance();
            cur.advance();
            while (true) {
                if (cur.eof())
                    throw SyntaxError(path, line, col, "unterminated block comment");
                if (cur.peek() == '*' && cur.peek(1) == '/') {
                    cur.advance();
                    cur.advance();
                    break;
                }
                cur.advance();
            }
            continue;
        }

        const int line = cur.line(), col = cur.column();

        if (ident_start(c)) {
            std::string word;
            while (!cur.eof() && ident_part(cur.peek())) word.push_back(cur.advance());
            push(kKeywords.count(word) ? TokenKind::kKeyword : TokenKind::kIdentifier,
                 std::move(word), line, col);
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            bool is_float = false;
            while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                num.push_back(cur.advance());
            if (cur.peek() == '.' && std::isdigit(static_cast<unsigned char>(cur.peek(1)))) {
                is_float = true;
                num.push_back(cur.advance());
                while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                    num.push_back(cur.advance());
            }
            if (cur.peek() == 'e' || cur.peek() == 'E') {
                const char sign = cur.peek(1);
                if (std::isdigit(static_cast<unsigned char>(sign)) ||
                    ((sign == '+' || sign == '-') &&
                     std::isdigit(static_cast<unsigned char>(cur.peek(2))))) {
                    is_float = true;
                    num.push_back(cur.advance());
                    if (cur.peek() == '+' || cur.peek() == '-') num.push_back(cur.advance());
                    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
                        num.push_back(cur.advance());
                }
            }
            if (cur.peek() == 'f' || cur.peek() == 'F' || cur.peek() == 'd' || cur.peek() == 'D') {
                is_float = true;
                num.push_back(cur.advance());
            } else if (cur.peek() == 'l' || cur.peek() == 'L') {
                num.push_back(cur.advance());
            }
            push(is_float ? TokenKind::kFloatLiteral : TokenKind::kIntLiteral, std::move(num),
                 line, col);
            continue;
        }

        if (c == '"' || c == '\'') {
            const char quote = c;
            std::string lit;
            lit.push_back(cur.advance());
            while (true) {
                if (cur.eof() || cur.peek() == '\n')
                    throw SyntaxError(path, line, col,
                                      quote == '"' ? "unterminated string literal"
                                                   : "unterminated character literal");
                const char ch = cur.advance();
                lit.push_back(ch);
                if (ch == '\\') {
                    if (cur.eof()) throw SyntaxError(path, line, col, "unterminated escape");
                    lit.push_back(cur.advance());
                    continue;
                }
                if (ch == quote) break;
            }
            push(quote == '"' ? TokenKind::kStringLiteral : TokenKind::kCharLiteral,
                 std::move(lit), line, col);
            continue;
        }

        // operators and punctuation
        auto two = [&](const char* op) {
            return cur.peek() == op[0] && cur.peek(1) == op[1];
        };
        static const char* kTwoCharOps[] = {"&&", "||", "==", "!=", "<=", ">=", "++",
                                            "--", "+=", "-=", "*=", "/=", "%="};
        bool matched = false;
        for (const char* op : kTwoCharOps) {
            if (two(op)) {
                cur.advance();
                cur.advance();
                push(TokenKind::kPunct, op, line, col);
                matched = true;
                break;
            }
        }
        if (matched) continue;

        static const std::string_view kSingles = "{}()[];,.=<>+-*/%!?:";
        if (kSingles.find(c) != std::string_view::npos) {
            cur.advance();
            push(TokenKind::kPunct, std::string(1, c), line, col);
            continue;
        }

        cur.fail(std::string("character '") + c + "' is outside the supported language subset");
    }

    out.push_back(Token{TokenKind::kEof, "", cur.line(), cur.column()});
    return out;
}

}  // namespace oomet
