#include "tempra/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace tempra {

ParseError::ParseError(int line, int column, const std::string& message,
                       std::vector<std::string> expected_)
    : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      line(line),
      column(column),
      expected(std::move(expected_)) {}

namespace {

enum class Tok {
    End,
    Ident,
    Number,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Amp,
    Bar,
    Tilde,
    Arrow,
    Plus,
    Minus,
    Star,
    Slash,
    Eq,
    Le,
    Lt,
    Ge,
    Gt,
};

struct Token {
    Tok type;
    std::string text;
    int line, col;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        int tl = line, tc = col;
        auto push = [&](Tok t, std::size_t n) {
            out.push_back({t, std::string(text.substr(i, n)), tl, tc});
            advance(n);
        };
        if (ident_start(c)) {
            std::size_t n = 1;
            while (i + n < text.size() && ident_char(text[i + n])) ++n;
            push(Tok::Ident, n);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t n = 1;
            bool dot = false;
            while (i + n < text.size()) {
                char d = text[i + n];
                if (std::isdigit(static_cast<unsigned char>(d))) {
                    ++n;
                } else if (d == '.' && !dot) {
                    dot = true;
                    ++n;
                } else {
                    break;
                }
            }
            push(Tok::Number, n);
        } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            push(Tok::Arrow, 2);
        } else if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') {
            push(Tok::Le, 2);
        } else if (c == '>' && i + 1 < text.size() && text[i + 1] == '=') {
            push(Tok::Ge, 2);
        } else {
            switch (c) {
                case '(': push(Tok::LParen, 1); break;
                case ')': push(Tok::RParen, 1); break;
                case '[': push(Tok::LBracket, 1); break;
                case ']': push(Tok::RBracket, 1); break;
                case ',': push(Tok::Comma, 1); break;
                case '&': push(Tok::Amp, 1); break;
                case '|': push(Tok::Bar, 1); break;
                case '~': push(Tok::Tilde, 1); break;
                case '+': push(Tok::Plus, 1); break;
                case '-': push(Tok::Minus, 1); break;
                case '*': push(Tok::Star, 1); break;
                case '/': push(Tok::Slash, 1); break;
                case '=': push(Tok::Eq, 1); break;
                case '<': push(Tok::Lt, 1); break;
                case '>': push(Tok::Gt, 1); break;
                default:
                    throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
            }
        }
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

struct PTerm {
    std::string time;
    Formula body;
    std::optional<Formula> given;
    int line, col;
};

// A polynomial term as parsed: either a constant, or a coefficient with one
// or more P-term factors.
struct RawTerm {
    Rational coef;
    std::vector<PTerm> pterms;
};

struct RawPoly {
    std::vector<RawTerm> terms;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Formula parse() {
        Formula f = formula(true);
        expect(Tok::End, "end of input");
        return f;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(std::size_t k = 1) const {
        return toks_[std::min(pos_ + k, toks_.size() - 1)];
    }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg, std::vector<std::string> expected = {}) {
        throw ParseError(cur().line, cur().col, msg, std::move(expected));
    }

    Token expect(Tok t, const std::string& what) {
        if (cur().type != t) {
            fail("expected " + what +
                     (cur().type == Tok::End ? " before end of input"
                                             : ", found '" + cur().text + "'"),
                 {what});
        }
        return take();
    }

    bool accept(Tok t) {
        if (cur().type == t) {
            ++pos_;
            return true;
        }
        return false;
    }

    // allow_bar: whether '|' at this level is disjunction.  Directly inside
    // P[t](...) it is the conditional bar instead.
    Formula formula(bool allow_bar) {
        Formula lhs = disjunction(allow_bar);
        if (accept(Tok::Arrow)) {
            return Formula::implies(std::move(lhs), formula(allow_bar));
        }
        return lhs;
    }

    Formula disjunction(bool allow_bar) {
        Formula f = conjunction(allow_bar);
        while (allow_bar && accept(Tok::Bar)) {
            f = Formula::disj(std::move(f), conjunction(allow_bar));
        }
        return f;
    }

    Formula conjunction(bool allow_bar) {
        Formula f = unary(allow_bar);
        while (accept(Tok::Amp)) {
            f = Formula::conj(std::move(f), unary(allow_bar));
        }
        return f;
    }

    Formula unary(bool allow_bar) {
        if (accept(Tok::Tilde)) {
            return Formula::negate(unary(allow_bar));
        }
        return atom();
    }

    Formula atom() {
        const Token& t = cur();
        switch (t.type) {
            case Tok::LParen: {
                take();
                Formula f = formula(true);
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::Ident:
                if (t.text == "HOLDS" && peek().type == Tok::LParen) return holds_or_occ(true);
                if (t.text == "OCC" && peek().type == Tok::LParen) return holds_or_occ(false);
                if (t.text == "INEV" && peek().type == Tok::LBracket) return modal(true);
                if (t.text == "POSS" && peek().type == Tok::LBracket) return modal(false);
                if (t.text == "P" && peek().type == Tok::LBracket) return prob_comparison();
                return time_comparison();
            case Tok::Number:
            case Tok::Minus:
                return prob_comparison();
            default:
                fail("expected a formula", {"formula"});
        }
    }

    std::string time_symbol() { return expect(Tok::Ident, "time symbol").text; }

    Formula holds_or_occ(bool is_holds) {
        take();  // keyword
        expect(Tok::LParen, "'('");
        std::string t1 = time_symbol();
        expect(Tok::Comma, "','");
        std::string t2 = time_symbol();
        expect(Tok::Comma, "','");
        std::string sym = expect(Tok::Ident, is_holds ? "fact symbol" : "event symbol").text;
        expect(Tok::RParen, "')'");
        return is_holds ? Formula::holds(std::move(t1), std::move(t2), std::move(sym))
                        : Formula::occ(std::move(t1), std::move(t2), std::move(sym));
    }

    Formula modal(bool is_inev) {
        take();  // keyword
        expect(Tok::LBracket, "'['");
        std::string t = time_symbol();
        expect(Tok::RBracket, "']'");
        expect(Tok::LParen, "'('");
        Formula f = formula(true);
        expect(Tok::RParen, "')'");
        return is_inev ? Formula::inev(std::move(t), std::move(f))
                       : Formula::poss(std::move(t), std::move(f));
    }

    Formula time_comparison() {
        std::string t1 = time_symbol();
        Tok op = cur().type;
        if (op != Tok::Eq && op != Tok::Le && op != Tok::Lt) {
            fail("expected '=', '<=' or '<' after time symbol", {"=", "<=", "<"});
        }
        take();
        std::string t2 = time_symbol();
        switch (op) {
            case Tok::Eq: return Formula::time_eq(std::move(t1), std::move(t2));
            case Tok::Le: return Formula::time_le(std::move(t1), std::move(t2));
            default: return Formula::time_lt(std::move(t1), std::move(t2));
        }
    }

    Rational rational_literal() {
        Token n = expect(Tok::Number, "rational");
        std::string text = n.text;
        if (accept(Tok::Slash)) {
            Token d = expect(Tok::Number, "denominator");
            text += "/" + d.text;
        }
        try {
            return Rational::parse(text);
        } catch (const std::exception& e) {
            throw ParseError(n.line, n.col, e.what());
        }
    }

    PTerm pterm() {
        int pl = cur().line, pc = cur().col;
        take();  // 'P'
        expect(Tok::LBracket, "'['");
        std::string t = time_symbol();
        expect(Tok::RBracket, "']'");
        expect(Tok::LParen, "'('");
        Formula body = formula(false);
        std::optional<Formula> given;
        if (accept(Tok::Bar)) {
            given = formula(false);
            if (cur().type == Tok::Bar) {
                fail("P-term with more than one top-level '|'");
            }
        }
        expect(Tok::RParen, "')'");
        return {std::move(t), std::move(body), std::move(given), pl, pc};
    }

    bool at_pterm() const {
        return cur().type == Tok::Ident && cur().text == "P" && peek().type == Tok::LBracket;
    }

    RawTerm raw_term() {
        RawTerm term{Rational(1), {}};
        if (cur().type == Tok::Number) {
            term.coef = rational_literal();
            if (!accept(Tok::Star)) {
                return term;  // plain constant
            }
            if (!at_pterm()) fail("expected P-term after '*'", {"P[...](...)"} );
        } else if (!at_pterm()) {
            fail("expected rational or P-term", {"rational", "P[...](...)"}
            );
        }
        term.pterms.push_back(pterm());
        while (accept(Tok::Star)) {
            if (!at_pterm()) fail("expected P-term after '*'", {"P[...](...)"});
            term.pterms.push_back(pterm());
        }
        return term;
    }

    RawPoly poly() {
        RawPoly p;
        bool negate_first = accept(Tok::Minus);
        RawTerm first = raw_term();
        if (negate_first) first.coef = -first.coef;
        p.terms.push_back(std::move(first));
        for (;;) {
            if (accept(Tok::Plus)) {
                p.terms.push_back(raw_term());
            } else if (accept(Tok::Minus)) {
                RawTerm t = raw_term();
                t.coef = -t.coef;
                p.terms.push_back(std::move(t));
            } else {
                break;
            }
        }
        return p;
    }

    static bool is_literal_zero(const RawPoly& p) {
        return p.terms.size() == 1 && p.terms[0].pterms.empty() && p.terms[0].coef.is_zero();
    }

    Formula prob_comparison() {
        int pl = cur().line, pc = cur().col;
        RawPoly lhs = poly();
        Cmp op;
        switch (cur().type) {
            case Tok::Ge: op = Cmp::Ge; break;
            case Tok::Le: op = Cmp::Le; break;
            case Tok::Eq: op = Cmp::Eq; break;
            case Tok::Gt: op = Cmp::Gt; break;
            case Tok::Lt: op = Cmp::Lt; break;
            default:
                fail("expected comparator in probability comparison",
                     {">=", "<=", "=", ">", "<"});
        }
        take();
        RawPoly rhs = poly();

        // A conditional bar term is only legal as the entire left side,
        // compared against a constant.
        bool bar_lhs = false, bar_elsewhere = false;
        for (const RawTerm& t : lhs.terms) {
            for (const PTerm& pt : t.pterms) {
                if (!pt.given) continue;
                if (lhs.terms.size() == 1 && t.pterms.size() == 1 && t.coef == Rational(1)) {
                    bar_lhs = true;
                } else {
                    bar_elsewhere = true;
                }
            }
        }
        for (const RawTerm& t : rhs.terms) {
            for (const PTerm& pt : t.pterms) {
                if (pt.given) bar_elsewhere = true;
            }
        }
        if (bar_elsewhere) {
            throw ParseError(pl, pc,
                             "conditional P-term must stand alone against a constant bound");
        }
        if (bar_lhs) {
            if (rhs.terms.size() != 1 || !rhs.terms[0].pterms.empty()) {
                throw ParseError(pl, pc,
                                 "conditional P-term must be compared with a rational constant");
            }
            PTerm& pt = lhs.terms[0].pterms[0];
            return Formula::cond_prob_cmp(std::move(pt.time), std::move(pt.body),
                                          std::move(*pt.given), op, rhs.terms[0].coef);
        }

        // All P-terms of one comparison share a single time index.
        std::optional<std::string> shared;
        auto check_time = [&](const PTerm& pt) {
            if (!shared) {
                shared = pt.time;
            } else if (*shared != pt.time) {
                throw ParseError(pt.line, pt.col,
                                 "P-terms in one comparison must share the time index ('" +
                                     *shared + "' vs '" + pt.time + "')");
            }
        };
        for (const RawTerm& t : lhs.terms)
            for (const PTerm& pt : t.pterms) check_time(pt);
        for (const RawTerm& t : rhs.terms)
            for (const PTerm& pt : t.pterms) check_time(pt);
        if (!shared) {
            throw ParseError(pl, pc, "probability comparison needs at least one P-term");
        }

        Polynomial monomials;
        auto append = [&](RawPoly& p, bool negated) {
            for (RawTerm& t : p.terms) {
                Monomial m{negated ? -t.coef : t.coef, {}};
                m.factors.reserve(t.pterms.size());
                for (PTerm& pt : t.pterms) m.factors.push_back(std::move(pt.body));
                monomials.push_back(std::move(m));
            }
        };
        append(lhs, false);
        // "poly cmp 0" stays as written so the printed form reparses to the
        // same tree; otherwise the right side moves over negated.
        if (!is_literal_zero(rhs)) append(rhs, true);
        return Formula::prob_cmp(std::move(*shared), std::move(monomials), op);
    }
};

}  // namespace

Formula parse_formula(std::string_view text) {
    return Parser(tokenize(text)).parse();
}

}  // namespace tempra
