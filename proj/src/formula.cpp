#include "combproof/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace combproof {

Atom Atom::dual() const {
    switch (kind) {
        case Kind::Pos: return neg(var);
        case Kind::Neg: return pos(var);
        case Kind::Zero: return one();
        case Kind::One: return zero();
    }
    throw Error("corrupt atom");
}

std::string Atom::text() const {
    switch (kind) {
        case Kind::Pos: return var;
        case Kind::Neg: return "~" + var;
        case Kind::Zero: return "0";
        case Kind::One: return "1";
    }
    throw Error("corrupt atom");
}

bool dual_literals(const Atom& a, const Atom& b) {
    return a.is_literal() && b.is_literal() && a == b.dual();
}

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0]))))
        return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

}  // namespace

Atom parse_atom(const std::string& text) {
    if (text == "0") return Atom::zero();
    if (text == "1") return Atom::one();
    if (text.size() > 1 && text[0] == '~') {
        std::string name = text.substr(1);
        if (valid_identifier(name)) return Atom::neg(name);
    } else if (valid_identifier(text)) {
        return Atom::pos(text);
    }
    throw Error("not an atom: '" + text + "'");
}

Prop Proposition::var(std::string name) {
    return Prop(new Proposition(Kind::Var, std::move(name), false, nullptr, nullptr));
}
Prop Proposition::constant(bool value) {
    return Prop(new Proposition(Kind::Const, {}, value, nullptr, nullptr));
}
Prop Proposition::negation(Prop child) {
    return Prop(new Proposition(Kind::Not, {}, false, std::move(child), nullptr));
}
Prop Proposition::conj(Prop lhs, Prop rhs) {
    return Prop(new Proposition(Kind::And, {}, false, std::move(lhs), std::move(rhs)));
}
Prop Proposition::disj(Prop lhs, Prop rhs) {
    return Prop(new Proposition(Kind::Or, {}, false, std::move(lhs), std::move(rhs)));
}
Prop Proposition::implies(Prop lhs, Prop rhs) {
    return Prop(new Proposition(Kind::Implies, {}, false, std::move(lhs), std::move(rhs)));
}

bool equal(const Prop& a, const Prop& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case Proposition::Kind::Var: return a->name == b->name;
        case Proposition::Kind::Const: return a->value == b->value;
        case Proposition::Kind::Not: return equal(a->lhs, b->lhs);
        default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

namespace {

void collect_variables(const Prop& phi, std::set<std::string>& out) {
    switch (phi->kind) {
        case Proposition::Kind::Var: out.insert(phi->name); break;
        case Proposition::Kind::Const: break;
        case Proposition::Kind::Not: collect_variables(phi->lhs, out); break;
        default:
            collect_variables(phi->lhs, out);
            collect_variables(phi->rhs, out);
    }
}

}  // namespace

std::vector<std::string> variables(const Prop& phi) {
    std::set<std::string> vars;
    collect_variables(phi, vars);
    return {vars.begin(), vars.end()};
}

int tree_size(const Prop& phi) {
    switch (phi->kind) {
        case Proposition::Kind::Var:
        case Proposition::Kind::Const: return 1;
        case Proposition::Kind::Not: return 1 + tree_size(phi->lhs);
        default: return 1 + tree_size(phi->lhs) + tree_size(phi->rhs);
    }
}

std::string print(const Prop& phi) {
    switch (phi->kind) {
        case Proposition::Kind::Var: return phi->name;
        case Proposition::Kind::Const: return phi->value ? "1" : "0";
        case Proposition::Kind::Not: return "(~" + print(phi->lhs) + ")";
        case Proposition::Kind::And:
            return "(" + print(phi->lhs) + " & " + print(phi->rhs) + ")";
        case Proposition::Kind::Or:
            return "(" + print(phi->lhs) + " | " + print(phi->rhs) + ")";
        case Proposition::Kind::Implies:
            return "(" + print(phi->lhs) + " -> " + print(phi->rhs) + ")";
    }
    throw Error("corrupt proposition");
}

// ----------------------------------------------------------------- parser ---

namespace {

struct Token {
    enum class Kind { Ident, Zero, One, Not, And, Or, Implies, LParen, RParen, End };
    Kind kind;
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    std::size_t last_visible = 0;
    while (i < input.size()) {
        unsigned char c = input[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        last_visible = i;
        if (c == '(') {
            tokens.push_back({Token::Kind::LParen, "(", i++});
        } else if (c == ')') {
            tokens.push_back({Token::Kind::RParen, ")", i++});
        } else if (c == '~') {
            tokens.push_back({Token::Kind::Not, "~", i++});
        } else if (c == '&') {
            tokens.push_back({Token::Kind::And, "&", i++});
        } else if (c == '|') {
            tokens.push_back({Token::Kind::Or, "|", i++});
        } else if (c == '-') {
            if (i + 1 < input.size() && input[i + 1] == '>') {
                tokens.push_back({Token::Kind::Implies, "->", i});
                i += 2;
            } else {
                throw SyntaxError("unknown token '-'", i);
            }
        } else if (c == '0') {
            tokens.push_back({Token::Kind::Zero, "0", i++});
        } else if (c == '1') {
            tokens.push_back({Token::Kind::One, "1", i++});
        } else if (std::isalpha(c)) {
            std::size_t start = i;
            while (i < input.size() &&
                   (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_'))
                ++i;
            tokens.push_back({Token::Kind::Ident, input.substr(start, i - start), start});
        } else {
            throw SyntaxError(std::string("unknown token '") + static_cast<char>(c) + "'", i);
        }
    }
    tokens.push_back({Token::Kind::End, "", last_visible});
    return tokens;
}

class Parser {
  public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Prop parse() {
        if (tokens_.size() == 1)
            throw SyntaxError("empty input", 0);
        Prop result = parse_implies();
        if (peek().kind != Token::Kind::End)
            throw SyntaxError("unexpected token '" + peek().text + "'", peek().offset);
        return result;
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) {
        const Token& t = peek();
        if (t.kind == Token::Kind::End)
            throw SyntaxError(what + ", input ended", t.offset);
        throw SyntaxError(what + ", found '" + t.text + "'", t.offset);
    }

    Prop parse_implies() {  // right-associative
        Prop lhs = parse_or();
        if (peek().kind == Token::Kind::Implies) {
            advance();
            return Proposition::implies(std::move(lhs), parse_implies());
        }
        return lhs;
    }

    Prop parse_or() {
        Prop lhs = parse_and();
        while (peek().kind == Token::Kind::Or) {
            advance();
            lhs = Proposition::disj(std::move(lhs), parse_and());
        }
        return lhs;
    }

    Prop parse_and() {
        Prop lhs = parse_unary();
        while (peek().kind == Token::Kind::And) {
            advance();
            lhs = Proposition::conj(std::move(lhs), parse_unary());
        }
        return lhs;
    }

    Prop parse_unary() {
        if (peek().kind == Token::Kind::Not) {
            advance();
            return Proposition::negation(parse_unary());
        }
        return parse_primary();
    }

    Prop parse_primary() {
        switch (peek().kind) {
            case Token::Kind::Zero: advance(); return Proposition::constant(false);
            case Token::Kind::One: advance(); return Proposition::constant(true);
            case Token::Kind::Ident: return Proposition::var(advance().text);
            case Token::Kind::LParen: {
                advance();
                Prop inner = parse_implies();
                if (peek().kind != Token::Kind::RParen)
                    fail("unbalanced parenthesis, expected ')'");
                advance();
                return inner;
            }
            default: fail("expected an atom or '('");
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

Prop parse_proposition(const std::string& text) {
    return Parser(tokenize(text)).parse();
}

// ------------------------------------------------------------- semantics ---

int evaluate(const Valuation& f, const Prop& phi) {
    switch (phi->kind) {
        case Proposition::Kind::Var: {
            auto it = f.find(phi->name);
            if (it == f.end()) throw MissingVariable(phi->name);
            return it->second ? 1 : 0;
        }
        case Proposition::Kind::Const:
            return phi->value ? 1 : 0;
        case Proposition::Kind::Not:
            return 1 - evaluate(f, phi->lhs);
        case Proposition::Kind::And:
            return std::min(evaluate(f, phi->lhs), evaluate(f, phi->rhs));
        case Proposition::Kind::Or:
            return std::max(evaluate(f, phi->lhs), evaluate(f, phi->rhs));
        case Proposition::Kind::Implies:
            return std::max(1 - evaluate(f, phi->lhs), evaluate(f, phi->rhs));
    }
    throw Error("corrupt proposition");
}

bool is_tautology_bruteforce(const Prop& phi, int max_vars) {
    std::vector<std::string> vars = variables(phi);
    if (static_cast<int>(vars.size()) > max_vars)
        throw ResourceLimit("too many variables for brute force: " +
                            std::to_string(vars.size()) + " > " + std::to_string(max_vars));
    const std::uint64_t combinations = std::uint64_t{1} << vars.size();
    Valuation f;
    for (std::uint64_t bits = 0; bits < combinations; ++bits) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            f[vars[i]] = (bits >> i) & 1 ? 1 : 0;
        if (evaluate(f, phi) != 1) return false;
    }
    return true;
}

}  // namespace combproof
