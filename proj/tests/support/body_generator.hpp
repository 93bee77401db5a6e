#pragma once

// Seeded random source generator for the parser/CC property tests: emits a
// single-method class whose body is drawn from the supported statement and
// expression grammar. Identifiers and string literals never contain
// decision keywords, so the lexical oracle sees exactly the real
// constructs.

#include <random>
#include <sstream>
#include <string>

namespace oomet::testsupport {

class BodyGenerator {
  public:
    explicit BodyGenerator(std::uint32_t seed) : rng_(seed) {}

    // A full compilation unit: class G<n> { int run(int x, int y) { ... } }
    std::string next_class_source() {
        std::ostringstream out;
        out << "class Gen" << serial_++ << " {\n";
        out << "    int run(int x, int y) {\n";
        const int statements = 1 + pick(4);
        for (int i = 0; i < statements; ++i) out << statement(2);
        out << "        return x;\n";
        out << "    }\n";
        out << "}\n";
        return out.str();
    }

  private:
    std::size_t pick(std::size_t bound) { return rng_() % bound; }

    std::string ident() {
        static const char* names[] = {"x", "y", "total", "acc", "value", "item"};
        return names[pick(6)];
    }

    std::string literal() { return std::to_string(pick(100)); }

    std::string atom() {
        switch (pick(4)) {
            case 0: return literal();
            case 1: return ident();
            case 2: return ident() + "." + "size()";
            default: return "(" + ident() + " + " + literal() + ")";
        }
    }

    std::string comparison() { return atom() + " < " + atom(); }

    // Boolean expression with optional short-circuit operators.
    std::string condition(int depth) {
        std::string expr = comparison();
        const std::size_t extra = depth > 0 ? pick(3) : 0;
        for (std::size_t i = 0; i < extra; ++i)
            expr += (pick(2) == 0 ? " && " : " || ") + comparison();
        return expr;
    }

    std::string value_expr(int depth) {
        if (depth > 0 && pick(5) == 0)
            return "(" + condition(depth - 1) + " ? " + atom() + " : " + atom() + ")";
        std::string expr = atom();
        const std::size_t terms = pick(3);
        for (std::size_t i = 0; i < terms; ++i)
            expr += (pick(2) == 0 ? " + " : " * ") + atom();
        return expr;
    }

    std::string block(int depth) {
        std::ostringstream out;
        out << "{\n";
        const int statements = 1 + static_cast<int>(pick(3));
        for (int i = 0; i < statements; ++i) out << statement(depth);
        out << "}\n";
        return out.str();
    }

    std::string statement(int depth) {
        const std::size_t choice = depth > 0 ? pick(9) : pick(2);
        switch (choice) {
            case 0:
                return ident() + " = " + value_expr(depth) + ";\n";
            case 1:
                return "log(" + value_expr(depth) + ");\n";
            case 2:
                return "if (" + condition(depth) + ") " + block(depth - 1) +
                       (pick(2) == 0 ? "else " + block(depth - 1) : "");
            case 3:
                return "while (" + condition(depth) + ") " + block(depth - 1);
            case 4:
                return "do " + block(depth - 1) + "while (" + condition(depth) + ");\n";
            case 5:
                return "for (int i = 0; i < " + literal() + "; i = i + 1) " + block(depth - 1);
            case 6: {
                std::ostringstream out;
                out << "switch (" << ident() << ") {\n";
                const int labels = 1 + static_cast<int>(pick(3));
                for (int i = 0; i < labels; ++i)
                    out << "case " << i << ":\n" << statement(depth - 1) << "break;\n";
                if (pick(2) == 0) out << "default:\nbreak;\n";
                out << "}\n";
                return out.str();
            }
            case 7:
                return "try " + block(depth - 1) + "catch (Exception err) " + block(depth - 1);
            default:
                return "int tmp" + std::to_string(pick(10)) + " = " + value_expr(depth) + ";\n";
        }
    }

    std::mt19937 rng_;
    int serial_ = 0;
};

}  // namespace oomet::testsupport
