#include "sclogic/parser.hpp"

#include <cctype>

namespace scl {

namespace {

bool is_name_start(char c) { return c >= 'a' && c <= 'z'; }
bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

class Parser {
public:
    explicit Parser(std::string_view input) : in_(input) {}

    Term run() {
        Term t = parse_cond();
        skip_ws();
        if (pos_ != in_.size()) fail("trailing input");
        return t;
    }

private:
    std::string_view in_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    bool eat(std::string_view token) {
        skip_ws();
        if (in_.substr(pos_).substr(0, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < in_.size() ? in_[pos_] : '\0';
    }

    Term parse_cond() {
        Term first = parse_or();
        if (eat("<|")) {
            Term condition = parse_or();
            if (!eat("|>")) fail("expected '|>'");
            Term otherwise = parse_or();
            return Term::cond(first, condition, otherwise);
        }
        return first;
    }

    Term parse_or() {
        Term t = parse_and();
        while (true) {
            skip_ws();
            // "||" must not swallow the "|>" closer.
            if (in_.substr(pos_, 2) == "||") {
                pos_ += 2;
                t = Term::seq_or(t, parse_and());
            } else {
                return t;
            }
        }
    }

    Term parse_and() {
        Term t = parse_unary();
        while (eat("&&")) t = Term::seq_and(t, parse_unary());
        return t;
    }

    Term parse_unary() {
        if (eat("!")) return Term::negation(parse_unary());
        return parse_primary();
    }

    Term parse_primary() {
        skip_ws();
        if (pos_ >= in_.size()) fail("unexpected end of input");
        char c = in_[pos_];
        if (c == '(') {
            ++pos_;
            Term t = parse_cond();
            if (!eat(")")) fail("expected ')'");
            return t;
        }
        if (c == 'T') {
            ++pos_;
            if (pos_ < in_.size() && is_name_char(in_[pos_])) fail("bad constant");
            return Term::truth();
        }
        if (c == 'F') {
            ++pos_;
            if (pos_ < in_.size() && is_name_char(in_[pos_])) fail("bad constant");
            return Term::falsity();
        }
        if (c == '$') {
            ++pos_;
            return Term::var(parse_name("variable"));
        }
        if (is_name_start(c)) return Term::atom(parse_name("atom"));
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string parse_name(const char* what) {
        if (pos_ >= in_.size() || !is_name_start(in_[pos_]))
            fail(std::string("expected ") + what + " name");
        std::size_t start = pos_;
        while (pos_ < in_.size() && is_name_char(in_[pos_])) ++pos_;
        return std::string(in_.substr(start, pos_ - start));
    }
};

// Precedence levels: cond = 0, || = 1, && = 2, ! = 3.
int precedence(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Cond: return 0;
        case Term::Kind::SeqOr: return 1;
        case Term::Kind::SeqAnd: return 2;
        default: return 4;
    }
}

void render_into(const Term& t, int min_prec, std::string& out) {
    int prec = precedence(t);
    bool parens = prec < min_prec;
    if (parens) out += '(';
    switch (t.kind()) {
        case Term::Kind::ConstT: out += 'T'; break;
        case Term::Kind::ConstF: out += 'F'; break;
        case Term::Kind::Atom: out += t.name(); break;
        case Term::Kind::Var:
            out += '$';
            out += t.name();
            break;
        case Term::Kind::Not:
            out += '!';
            render_into(t.arg(), 3, out);
            break;
        case Term::Kind::SeqAnd:
            render_into(t.lhs(), 2, out);
            out += " && ";
            render_into(t.rhs(), 3, out);
            break;
        case Term::Kind::SeqOr:
            render_into(t.lhs(), 1, out);
            out += " || ";
            render_into(t.rhs(), 2, out);
            break;
        case Term::Kind::Cond:
            render_into(t.then_branch(), 1, out);
            out += " <| ";
            render_into(t.condition(), 1, out);
            out += " |> ";
            render_into(t.else_branch(), 1, out);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

Term parse(std::string_view input) { return Parser(input).run(); }

std::string render(const Term& t) {
    std::string out;
    render_into(t, 0, out);
    return out;
}

std::string to_sexpr(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::ConstT: return "T";
        case Term::Kind::ConstF: return "F";
        case Term::Kind::Atom: return t.name();
        case Term::Kind::Var: return "$" + t.name();
        case Term::Kind::Not: return "(! " + to_sexpr(t.arg()) + ")";
        case Term::Kind::SeqAnd:
            return "(&& " + to_sexpr(t.lhs()) + " " + to_sexpr(t.rhs()) + ")";
        case Term::Kind::SeqOr:
            return "(|| " + to_sexpr(t.lhs()) + " " + to_sexpr(t.rhs()) + ")";
        case Term::Kind::Cond:
            return "(cond " + to_sexpr(t.then_branch()) + " " + to_sexpr(t.condition()) +
                   " " + to_sexpr(t.else_branch()) + ")";
    }
    throw error("unreachable term kind in to_sexpr");
}

std::string to_structured(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::ConstT: return "ConstT";
        case Term::Kind::ConstF: return "ConstF";
        case Term::Kind::Atom: return "Atom(" + t.name() + ")";
        case Term::Kind::Var: return "Var(" + t.name() + ")";
        case Term::Kind::Not: return "Not(" + to_structured(t.arg()) + ")";
        case Term::Kind::SeqAnd:
            return "SeqAnd(" + to_structured(t.lhs()) + ", " + to_structured(t.rhs()) + ")";
        case Term::Kind::SeqOr:
            return "SeqOr(" + to_structured(t.lhs()) + ", " + to_structured(t.rhs()) + ")";
        case Term::Kind::Cond:
            return "Cond(" + to_structured(t.then_branch()) + ", " +
                   to_structured(t.condition()) + ", " + to_structured(t.else_branch()) + ")";
    }
    throw error("unreachable term kind in to_structured");
}

}  // namespace scl
