#include "pdo/parser.hpp"

#include <cctype>

namespace pdo {

namespace {

struct Lexer {
    std::string text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError(why + " at position " + std::to_string(pos) + " in \"" + text + "\"");
    }
    // Reads a nonnegative integer literal.
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return text.substr(start, pos - start);
    }
    // Reads an identifier [A-Za-z][A-Za-z0-9_]*.
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }
};

class OpParser {
  public:
    OpParser(const std::string& text, const OpGrammar& g) : lex_{text}, g_(g) {}

    DiffOp run() {
        if (lex_.eof()) lex_.fail("empty expression");
        DiffOp e = expr();
        if (!lex_.eof()) lex_.fail("trailing input");
        return e;
    }

  private:
    DiffOp expr() {
        DiffOp acc = term();
        while (true) {
            if (lex_.accept('+'))
                acc = acc + term();
            else if (lex_.accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    DiffOp term() {
        DiffOp acc = factor();
        while (true) {
            if (lex_.accept('*'))
                acc = op_mul(acc, factor());
            else if (lex_.accept('/'))
                acc = op_mul(acc, invert_op(factor()));
            else
                return acc;
        }
    }

    DiffOp factor() {
        if (lex_.accept('-')) return -factor();
        if (lex_.accept('+')) return factor();
        DiffOp base = primary();
        while (lex_.accept('^')) {
            long e = std::stol(lex_.number());
            DiffOp acc = DiffOp::constant(g_.nvars, Scalar(1), g_.precision);
            for (long i = 0; i < e; ++i) acc = op_mul(acc, base);
            base = acc;
        }
        return base;
    }

    DiffOp primary() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.expect('(');
            DiffOp e = expr();
            lex_.expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return DiffOp::constant(g_.nvars, Scalar::from_string(lex_.number()), g_.precision);
        std::string id = lex_.ident();
        if (id.empty()) lex_.fail("expected a factor");
        if (id == "E") return normal_ordered_exp(g_.nvars, g_.precision);
        if (id == "inv") {
            lex_.expect('(');
            DiffOp e = expr();
            lex_.expect(')');
            return invert_op(e);
        }
        if ((id[0] == 'x' || id[0] == 'd') && id.size() > 1) {
            int v = 0;
            for (std::size_t i = 1; i < id.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(id[i]))) lex_.fail("bad variable " + id);
                v = v * 10 + (id[i] - '0');
            }
            if (v < 1 || v > g_.nvars) lex_.fail("variable index out of range in " + id);
            if (id[0] == 'x')
                return DiffOp::mult(
                    TruncatedSeries(Poly::variable(g_.nvars, v - 1), g_.precision));
            return DiffOp::partial(g_.nvars, v - 1, g_.precision);
        }
        lex_.fail("unknown name " + id);
    }

    DiffOp invert_op(const DiffOp& e) {
        // Only multiplication operators can be inverted.
        for (const auto& [a, c] : e.terms())
            if (total_degree(a) > 0)
                lex_.fail("inv() needs an order-zero operator");
        TruncatedSeries f = e.coeff(Exp(g_.nvars, 0));
        return DiffOp::mult(series_invert(f));
    }

    Lexer lex_;
    OpGrammar g_;
};

class PolyParser {
  public:
    PolyParser(const std::string& text, const std::vector<std::string>& names)
        : lex_{text}, names_(names) {}

    Poly run() {
        if (lex_.eof()) lex_.fail("empty expression");
        Poly e = expr();
        if (!lex_.eof()) lex_.fail("trailing input");
        return e;
    }

  private:
    int nvars() const { return static_cast<int>(names_.size()); }

    Poly expr() {
        Poly acc = term();
        while (true) {
            if (lex_.accept('+'))
                acc += term();
            else if (lex_.accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            if (lex_.accept('*')) {
                acc = acc * factor();
            } else if (lex_.accept('/')) {
                Poly d = factor();
                if (!d.is_constant() || d.is_zero()) lex_.fail("'/' needs a nonzero constant divisor");
                acc = acc.scaled(inverse(d.constant_term()));
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        if (lex_.accept('-')) return -factor();
        if (lex_.accept('+')) return factor();
        Poly base = primary();
        while (lex_.accept('^')) {
            long e = std::stol(lex_.number());
            Poly acc = Poly::constant(nvars(), Scalar(1));
            for (long i = 0; i < e; ++i) acc = acc * base;
            base = acc;
        }
        return base;
    }

    Poly primary() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.expect('(');
            Poly e = expr();
            lex_.expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(nvars(), Scalar::from_string(lex_.number()));
        std::string id = lex_.ident();
        if (id.empty()) lex_.fail("expected a factor");
        for (int v = 0; v < nvars(); ++v)
            if (id == names_[static_cast<std::size_t>(v)]) return Poly::variable(nvars(), v);
        lex_.fail("unknown variable " + id);
    }

    Lexer lex_;
    std::vector<std::string> names_;
};

}  // namespace

DiffOp parse_op(const std::string& text, const OpGrammar& g) {
    return OpParser(text, g).run();
}

Poly parse_poly(const std::string& text, const std::vector<std::string>& var_names) {
    return PolyParser(text, var_names).run();
}

}  // namespace pdo
