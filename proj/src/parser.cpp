// Recursive-descent parser for the Java-like subset:
//
//   unit    := [package a.b.c ;] {import a.b.C|* ;} {class}
//   class   := {modifier} "class" NAME ["extends" qualified] "{" {member} "}"
//   member  := {modifier} (ctor | method | field)
//   stmts   := block, if/else, while, do-while, for, switch/case, try/catch,
//              return, break, continue, local decls, expression statements
//   exprs   := assignment, ternary, || && == != relational + - * / % unary
//              postfix (calls, member access, indexing, ++/--), new
//
// No interfaces, generics, lambdas, annotations, or nested classes.
// Decision points and field accesses are tallied while the body is parsed;
// bare-identifier field accesses are resolved against the full field list
// once the class is complete, so fields declared below a method still count.

#include "oomet/parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "oomet/errors.hpp"
#include "oomet/lexer.hpp"

namespace oomet {

namespace {

// Per-body tally. Bare identifier uses are kept separate because whether
// they are field accesses is only decidable once all fields are known.
struct BodyTally {
    DecisionCounts counts;
    std::set<std::string> this_accesses;   // this.x / super.x
    std::set<std::string> bare_candidates; // unshadowed identifiers used as values
};

class Parser {
  public:
    Parser(std::string path, const std::string& content)
        : path_(std::move(path)), tokens_(tokenize(path_, content)) {}

    std::vector<ClassDecl> parse_unit() {
        std::string package;
        if (at_keyword("package")) {
            advance();
            package = parse_qualified_name();
            expect_punct(";");
        }
        while (at_keyword("import")) {
            advance();
            expect(TokenKind::kIdentifier, "import path");
            while (accept_punct(".")) {
                if (accept_punct("*")) break;
                expect(TokenKind::kIdentifier, "import path segment");
            }
            expect_punct(";");
        }

        std::vector<ClassDecl> classes;
        std::set<std::string> names_in_file;
        while (!at_eof()) {
            ClassDecl decl = parse_class(package);
            if (!names_in_file.insert(decl.name).second)
                fail("class '" + decl.name + "' declared twice in the same file");
            classes.push_back(std::move(decl));
        }
        return classes;
    }

  private:
    // --- token plumbing ---------------------------------------------------

    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    bool at_eof() const { return peek().is(TokenKind::kEof); }
    bool at_punct(std::string_view p) const { return peek().is_punct(p); }
    bool at_keyword(std::string_view k) const { return peek().is_keyword(k); }
    bool at_ident() const { return peek().is(TokenKind::kIdentifier); }

    bool accept_punct(std::string_view p) {
        if (!at_punct(p)) return false;
        advance();
        return true;
    }
    bool accept_keyword(std::string_view k) {
        if (!at_keyword(k)) return false;
        advance();
        return true;
    }

    const Token& expect_punct(std::string_view p) {
        if (!at_punct(p)) fail(std::string("expected '") + std::string(p) + "'");
        return advance();
    }
    const Token& expect(TokenKind kind, const char* what) {
        if (!peek().is(kind)) fail(std::string("expected ") + what);
        return advance();
    }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        const std::string got = t.is(TokenKind::kEof) ? "end of file" : "'" + t.text + "'";
        throw SyntaxError(path_, t.line, t.column, msg + ", found " + got);
    }

    // --- scopes -------------------------------------------------------------

    void push_scope() { scopes_.emplace_back(); }
    void pop_scope() { scopes_.pop_back(); }
    void declare_local(const std::string& name) {
        if (!scopes_.empty()) scopes_.back().insert(name);
    }
    bool is_shadowed(const std::string& name) const {
        for (const auto& scope : scopes_)
            if (scope.count(name)) return true;
        return false;
    }

    struct ScopeGuard {
        Parser& p;
        explicit ScopeGuard(Parser& parser) : p(parser) { p.push_scope(); }
        ~ScopeGuard() { p.pop_scope(); }
    };

    // --- declarations -------------------------------------------------------

    void skip_modifiers() {
        while (at_keyword("public") || at_keyword("private") || at_keyword("protected") ||
               at_keyword("static") || at_keyword("final") || at_keyword("abstract"))
            advance();
    }

    std::string parse_qualified_name() {
        std::string name = expect(TokenKind::kIdentifier, "identifier").text;
        while (at_punct(".") && peek(1).is(TokenKind::kIdentifier)) {
            advance();
            name += '.';
            name += advance().text;
        }
        return name;
    }

    // Type := qualified identifier {'[' ']'}; value unused beyond validation.
    void parse_type() {
        parse_qualified_name();
        while (at_punct("[") && peek(1).is_punct("]")) {
            advance();
            advance();
        }
    }

    ClassDecl parse_class(const std::string& package) {
        skip_modifiers();
        if (!accept_keyword("class")) fail("expected 'class'");
        ClassDecl decl;
        decl.name = expect(TokenKind::kIdentifier, "class name").text;
        decl.qualified_name = package.empty() ? decl.name : package + "." + decl.name;
        decl.source_path = path_;
        if (accept_keyword("extends")) decl.parent_name = parse_qualified_name();
        expect_punct("{");

        std::vector<BodyTally> tallies;  // parallel to decl.methods
        while (!accept_punct("}")) {
            if (at_eof()) fail("unterminated class body");
            parse_member(decl, tallies);
        }

        // Second pass for bare identifiers now that every field is known.
        const std::set<std::string> field_set(decl.fields.begin(), decl.fields.end());
        for (std::size_t i = 0; i < decl.methods.size(); ++i) {
            MethodDecl& m = decl.methods[i];
            m.accessed_fields = tallies[i].this_accesses;
            for (const std::string& name : tallies[i].bare_candidates)
                if (field_set.count(name)) m.accessed_fields.insert(name);
        }
        return decl;
    }

    void parse_member(ClassDecl& decl, std::vector<BodyTally>& tallies) {
        skip_modifiers();

        // Constructor: the class name immediately followed by '('.
        if (at_ident() && peek().text == decl.name && peek(1).is_punct("(")) {
            MethodDecl method;
            method.name = advance().text;
            tallies.push_back(parse_method_rest(method));
            decl.methods.push_back(std::move(method));
            return;
        }

        parse_type();
        const std::string name = expect(TokenKind::kIdentifier, "member name").text;

        if (at_punct("(")) {
            MethodDecl method;
            method.name = name;
            tallies.push_back(parse_method_rest(method));
            decl.methods.push_back(std::move(method));
            return;
        }

        // Field declarator list. Initializer expressions are validated but
        // contribute neither decision points nor field accesses.
        BodyTally discard;
        std::string declarator = name;
        while (true) {
            while (at_punct("[") && peek(1).is_punct("]")) {
                advance();
                advance();
            }
            if (std::find(decl.fields.begin(), decl.fields.end(), declarator) !=
                decl.fields.end())
                fail("field '" + declarator + "' declared twice");
            decl.fields.push_back(declarator);
            if (accept_punct("=")) parse_expression(discard);
            if (accept_punct(",")) {
                declarator = expect(TokenKind::kIdentifier, "field name").text;
                continue;
            }
            break;
        }
        expect_punct(";");
    }

    // Parses "(params) { body }" into the method and returns its tally.
    BodyTally parse_method_rest(MethodDecl& method) {
        BodyTally tally;
        ScopeGuard params(*this);
        expect_punct("(");
        if (!at_punct(")")) {
            do {
                parse_type();
                std::string pname = expect(TokenKind::kIdentifier, "parameter name").text;
                while (at_punct("[") && peek(1).is_punct("]")) {
                    advance();
                    advance();
                }
                declare_local(pname);
            } while (accept_punct(","));
        }
        expect_punct(")");
        parse_block(tally);
        method.decision_points = tally.counts;
        return tally;
    }

    // --- statements ---------------------------------------------------------

    void parse_block(BodyTally& t) {
        ScopeGuard scope(*this);
        expect_punct("{");
        while (!accept_punct("}")) {
            if (at_eof()) fail("unterminated block");
            parse_statement(t);
        }
    }

    void parse_statement(BodyTally& t) {
        if (at_punct("{")) {
            parse_block(t);
            return;
        }
        if (accept_punct(";")) return;

        if (accept_keyword("if")) {
            ++t.counts[DecisionKind::kIf];
            expect_punct("(");
            parse_expression(t);
            expect_punct(")");
            parse_statement(t);
            if (accept_keyword("else")) parse_statement(t);
            return;
        }
        if (accept_keyword("while")) {
            ++t.counts[DecisionKind::kLoop];
            expect_punct("(");
            parse_expression(t);
            expect_punct(")");
            parse_statement(t);
            return;
        }
        if (accept_keyword("do")) {
            ++t.counts[DecisionKind::kLoop];
            parse_statement(t);
            if (!accept_keyword("while")) fail("expected 'while' after do-body");
            expect_punct("(");
            parse_expression(t);
            expect_punct(")");
            expect_punct(";");
            return;
        }
        if (accept_keyword("for")) {
            ++t.counts[DecisionKind::kLoop];
            ScopeGuard scope(*this);
            expect_punct("(");
            if (!at_punct(";")) {
                if (looks_like_declaration())
                    parse_local_declaration(t, /*consume_semi=*/false);
                else
                    parse_expression_list(t);
            }
            expect_punct(";");
            if (!at_punct(";")) parse_expression(t);
            expect_punct(";");
            if (!at_punct(")")) parse_expression_list(t);
            expect_punct(")");
            parse_statement(t);
            return;
        }
        if (accept_keyword("switch")) {
            expect_punct("(");
            parse_expression(t);
            expect_punct(")");
            expect_punct("{");
            while (!accept_punct("}")) {
                if (accept_keyword("case")) {
                    ++t.counts[DecisionKind::kCase];
                    parse_expression(t);
                    expect_punct(":");
                } else if (accept_keyword("default")) {
                    expect_punct(":");
                } else if (at_eof()) {
                    fail("unterminated switch body");
                } else {
                    parse_statement(t);
                }
            }
            return;
        }
        if (accept_keyword("try")) {
            parse_block(t);
            bool any_handler = false;
            while (accept_keyword("catch")) {
                ++t.counts[DecisionKind::kCatch];
                any_handler = true;
                ScopeGuard scope(*this);
                expect_punct("(");
                parse_type();
                declare_local(expect(TokenKind::kIdentifier, "exception name").text);
                expect_punct(")");
                parse_block(t);
            }
            if (accept_keyword("finally")) {
                any_handler = true;
                parse_block(t);
            }
            if (!any_handler) fail("'try' needs at least one catch or finally");
            return;
        }
        if (accept_keyword("return")) {
            if (!at_punct(";")) parse_expression(t);
            expect_punct(";");
            return;
        }
        if (accept_keyword("break") || accept_keyword("continue")) {
            expect_punct(";");
            return;
        }

        if (looks_like_declaration()) {
            parse_local_declaration(t, /*consume_semi=*/true);
            return;
        }

        parse_expression(t);
        expect_punct(";");
    }

    // IDENT {'.' IDENT} {'[' ']'} IDENT  => a declaration is starting.
    bool looks_like_declaration() const {
        if (!at_ident()) return false;
        std::size_t k = pos_ + 1;
        auto tok = [&](std::size_t i) -> const Token& {
            return tokens_[std::min(i, tokens_.size() - 1)];
        };
        while (tok(k).is_punct(".") && tok(k + 1).is(TokenKind::kIdentifier)) k += 2;
        while (tok(k).is_punct("[") && tok(k + 1).is_punct("]")) k += 2;
        return tok(k).is(TokenKind::kIdentifier);
    }

    void parse_local_declaration(BodyTally& t, bool consume_semi) {
        parse_type();
        while (true) {
            std::string name = expect(TokenKind::kIdentifier, "variable name").text;
            while (at_punct("[") && peek(1).is_punct("]")) {
                advance();
                advance();
            }
            // Declared before its initializer is parsed, so the initializer
            // sees the shadowing name.
            declare_local(name);
            if (accept_punct("=")) parse_assignment(t);
            if (!accept_punct(",")) break;
        }
        if (consume_semi) expect_punct(";");
    }

    void parse_expression_list(BodyTally& t) {
        do {
            parse_expression(t);
        } while (accept_punct(","));
    }

    // --- expressions ----------------------------------------------------

    void parse_expression(BodyTally& t) { parse_assignment(t); }

    void parse_assignment(BodyTally& t) {
        parse_ternary(t);
        if (at_punct("=") || at_punct("+=") || at_punct("-=") || at_punct("*=") ||
            at_punct("/=") || at_punct("%=")) {
            advance();
            parse_assignment(t);
        }
    }

    void parse_ternary(BodyTally& t) {
        parse_or(t);
        if (accept_punct("?")) {
            ++t.counts[DecisionKind::kTernary];
            parse_expression(t);
            expect_punct(":");
            parse_ternary(t);
        }
    }

    void parse_or(BodyTally& t) {
        parse_and(t);
        while (accept_punct("||")) {
            ++t.counts[DecisionKind::kOr];
            parse_and(t);
        }
    }

    void parse_and(BodyTally& t) {
        parse_equality(t);
        while (accept_punct("&&")) {
            ++t.counts[DecisionKind::kAnd];
            parse_equality(t);
        }
    }

    void parse_equality(BodyTally& t) {
        parse_relational(t);
        while (at_punct("==") || at_punct("!=")) {
            advance();
            parse_relational(t);
        }
    }

    void parse_relational(BodyTally& t) {
        parse_additive(t);
        while (at_punct("<") || at_punct(">") || at_punct("<=") || at_punct(">=")) {
            advance();
            parse_additive(t);
        }
    }

    void parse_additive(BodyTally& t) {
        parse_multiplicative(t);
        while (at_punct("+") || at_punct("-")) {
            advance();
            parse_multiplicative(t);
        }
    }

    void parse_multiplicative(BodyTally& t) {
        parse_unary(t);
        while (at_punct("*") || at_punct("/") || at_punct("%")) {
            advance();
            parse_unary(t);
        }
    }

    void parse_unary(BodyTally& t) {
        if (at_punct("!") || at_punct("-") || at_punct("+") || at_punct("++") ||
            at_punct("--")) {
            advance();
            parse_unary(t);
            return;
        }
        parse_postfix(t);
    }

    enum class PrimaryKind { kValue, kBareIdent, kThisSuper };

    void parse_postfix(BodyTally& t) {
        std::string bare_name;
        const PrimaryKind kind = parse_primary(t, bare_name);

        if (kind == PrimaryKind::kBareIdent) {
            if (at_punct("(")) {
                parse_call_args(t);  // plain method call, not a field use
            } else if (!is_shadowed(bare_name)) {
                t.bare_candidates.insert(bare_name);
            }
        } else if (kind == PrimaryKind::kThisSuper) {
            if (at_punct("(")) {
                parse_call_args(t);  // this(...) / super(...) delegation
            } else if (accept_punct(".")) {
                const std::string member =
                    expect(TokenKind::kIdentifier, "member name").text;
                if (at_punct("("))
                    parse_call_args(t);
                else
                    t.this_accesses.insert(member);
            }
        }

        while (true) {
            if (accept_punct(".")) {
                expect(TokenKind::kIdentifier, "member name");
                if (at_punct("(")) parse_call_args(t);
                continue;
            }
            if (accept_punct("[")) {
                parse_expression(t);
                expect_punct("]");
                continue;
            }
            if (accept_punct("++") || accept_punct("--")) continue;
            break;
        }
    }

    PrimaryKind parse_primary(BodyTally& t, std::string& bare_name) {
        const Token& tok = peek();
        switch (tok.kind) {
            case TokenKind::kIntLiteral:
            case TokenKind::kFloatLiteral:
            case TokenKind::kStringLiteral:
            case TokenKind::kCharLiteral:
                advance();
                return PrimaryKind::kValue;
            case TokenKind::kIdentifier:
                bare_name = advance().text;
                return PrimaryKind::kBareIdent;
            default:
                break;
        }
        if (at_keyword("true") || at_keyword("false") || at_keyword("null")) {
            advance();
            return PrimaryKind::kValue;
        }
        if (at_keyword("this") || at_keyword("super")) {
            advance();
            return PrimaryKind::kThisSuper;
        }
        if (accept_punct("(")) {
            parse_expression(t);
            expect_punct(")");
            return PrimaryKind::kValue;
        }
        if (accept_keyword("new")) {
            parse_qualified_name();
            if (at_punct("(")) {
                parse_call_args(t);
            } else if (accept_punct("[")) {
                parse_expression(t);
                expect_punct("]");
                while (at_punct("[") && peek(1).is_punct("]")) {
                    advance();
                    advance();
                }
            } else {
                fail("expected '(' or '[' after 'new'");
            }
            return PrimaryKind::kValue;
        }
        fail("expected an expression");
    }

    void parse_call_args(BodyTally& t) {
        expect_punct("(");
        if (!at_punct(")")) {
            do {
                parse_expression(t);
            } while (accept_punct(","));
        }
        expect_punct(")");
    }

    std::string path_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<std::set<std::string>> scopes_;
};

}  // namespace

std::vector<ClassDecl> parse_file(const SourceFile& file) {
    if (file.content.empty())
        throw SyntaxError(file.path, 1, 1, "empty source file");
    Parser parser(file.path, file.content);
    return parser.parse_unit();
}

Corpus merge_classes(std::vector<ClassDecl> classes) {
    std::sort(classes.begin(), classes.end(), [](const ClassDecl& a, const ClassDecl& b) {
        return a.qualified_name < b.qualified_name;
    });
    for (std::size_t i = 1; i < classes.size(); ++i) {
        if (classes[i].qualified_name == classes[i - 1].qualified_name)
            throw DuplicateClassError("class '" + classes[i].qualified_name +
                                      "' declared in both " + classes[i - 1].source_path +
                                      " and " + classes[i].source_path);
    }
    return classes;
}

Corpus build_corpus(const std::vector<SourceFile>& files) {
    std::vector<ClassDecl> all;
    for (const SourceFile& file : files) {
        std::vector<ClassDecl> classes = parse_file(file);
        all.insert(all.end(), std::make_move_iterator(classes.begin()),
                   std::make_move_iterator(classes.end()));
    }
    return merge_classes(std::move(all));
}

}  // namespace oomet
