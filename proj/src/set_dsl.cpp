#include "carat/set_dsl.hpp"

#include <cctype>
#include <utility>

namespace carat {

namespace {

constexpr const char* kBuiltins[] = {"cantor3", "fatcantor", "dyadictail"};

bool is_builtin(const std::string& name) {
    for (const char* b : kBuiltins) {
        if (name == b) return true;
    }
    return false;
}

std::unique_ptr<SetExpr> make_interval(Rat lo, Rat hi) {
    auto node = std::make_unique<SetExpr>();
    node->kind = SetExpr::Kind::IntervalLit;
    node->lo = std::move(lo);
    node->hi = std::move(hi);
    return node;
}

std::unique_ptr<SetExpr> make_builtin(std::string name) {
    auto node = std::make_unique<SetExpr>();
    node->kind = SetExpr::Kind::Builtin;
    node->name = std::move(name);
    return node;
}

std::unique_ptr<SetExpr> make_binary(SetExpr::Kind kind, std::unique_ptr<SetExpr> left,
                                     std::unique_ptr<SetExpr> right) {
    auto node = std::make_unique<SetExpr>();
    node->kind = kind;
    node->left = std::move(left);
    node->right = std::move(right);
    return node;
}

std::unique_ptr<SetExpr> make_complement(std::unique_ptr<SetExpr> child) {
    auto node = std::make_unique<SetExpr>();
    node->kind = SetExpr::Kind::Complement;
    node->left = std::move(child);
    return node;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    SetExpr run() {
        auto root = parse_expr();
        if (peek().kind != TokenKind::End) {
            throw ParseError(peek().position, "unexpected input after expression");
        }
        return std::move(*root);
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token advance() { return tokens_[pos_++]; }

    Token expect(TokenKind kind, const char* what) {
        if (peek().kind != kind) {
            throw ParseError(peek().position, std::string("expected ") + what);
        }
        return advance();
    }

    std::unique_ptr<SetExpr> parse_expr() {
        auto left = parse_term();
        while (peek().kind == TokenKind::Pipe) {
            advance();
            left = make_binary(SetExpr::Kind::Union, std::move(left), parse_term());
        }
        return left;
    }

    std::unique_ptr<SetExpr> parse_term() {
        auto left = parse_factor();
        while (peek().kind == TokenKind::Amp) {
            advance();
            left = make_binary(SetExpr::Kind::Intersect, std::move(left), parse_factor());
        }
        return left;
    }

    std::unique_ptr<SetExpr> parse_factor() {
        if (peek().kind == TokenKind::Bang) {
            advance();
            return make_complement(parse_factor());
        }
        return parse_atom();
    }

    std::unique_ptr<SetExpr> parse_atom() {
        switch (peek().kind) {
            case TokenKind::LBracket: {
                std::size_t open_at = advance().position;
                Rat lo = parse_rat();
                expect(TokenKind::Comma, "','");
                Rat hi = parse_rat();
                expect(TokenKind::RParen, "')'");
                if (lo < Rat(0) || hi > Rat(1)) {
                    throw ParseError(open_at, "interval endpoint outside [0,1]");
                }
                if (lo >= hi) {
                    throw ParseError(open_at, "empty interval literal (lo >= hi)");
                }
                return make_interval(std::move(lo), std::move(hi));
            }
            case TokenKind::Ident: {
                Token tok = advance();
                if (!is_builtin(tok.lexeme)) {
                    throw ParseError(tok.position, "unknown builtin \"" + tok.lexeme + "\"");
                }
                return make_builtin(tok.lexeme);
            }
            case TokenKind::LParen: {
                advance();
                auto inner = parse_expr();
                expect(TokenKind::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError(peek().position, "expected '[', '(', '!' or a builtin name");
        }
    }

    Rat parse_rat() {
        Token tok = expect(TokenKind::Rational, "a rational number");
        auto value = Rat::parse(tok.lexeme);
        if (!value) throw ParseError(tok.position, "bad rational \"" + tok.lexeme + "\"");
        return *value;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::string format_rat_source(const Rat& r) {
    if (r.denominator() == 1) return r.numerator().str();
    return r.to_string();
}

void render(const SetExpr& expr, std::string& out) {
    switch (expr.kind) {
        case SetExpr::Kind::IntervalLit:
            out += '[';
            out += format_rat_source(expr.lo);
            out += ',';
            out += format_rat_source(expr.hi);
            out += ')';
            break;
        case SetExpr::Kind::Builtin:
            out += expr.name;
            break;
        case SetExpr::Kind::Complement: {
            out += '!';
            bool needs_parens = expr.left->kind == SetExpr::Kind::Union ||
                                expr.left->kind == SetExpr::Kind::Intersect;
            if (needs_parens) out += '(';
            render(*expr.left, out);
            if (needs_parens) out += ')';
            break;
        }
        case SetExpr::Kind::Intersect: {
            auto child = [&](const SetExpr& c) {
                bool needs_parens = c.kind == SetExpr::Kind::Union;
                if (needs_parens) out += '(';
                render(c, out);
                if (needs_parens) out += ')';
            };
            child(*expr.left);
            out += " & ";
            child(*expr.right);
            break;
        }
        case SetExpr::Kind::Union:
            render(*expr.left, out);
            out += " | ";
            render(*expr.right, out);
            break;
    }
}

int smallest_cantor3_stage(const Rat& eps) {
    Rat two_thirds(2, 3);
    Rat gap(1);
    for (int n = 0; n <= 40; ++n) {
        if (gap <= eps) return n;
        gap = gap * two_thirds;
    }
    throw std::length_error("cantor3 stage beyond 40 required");
}

int smallest_svc_stage(const Rat& eps) {
    for (int n = 0; n <= 20; ++n) {
        if (pow2(-(n + 1)) <= eps) return n;
    }
    throw std::length_error("fat Cantor stage beyond 20 required");
}

long dyadic_tail_bound(long level) {
    // smallest N with 2^N >= 2L, i.e. ceil(log2(2L))
    long n = 0;
    while ((1L << n) < 2 * level) ++n;
    return n;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        switch (c) {
            case '[': out.push_back({TokenKind::LBracket, "[", start}); ++i; continue;
            case ')': out.push_back({TokenKind::RParen, ")", start}); ++i; continue;
            case ',': out.push_back({TokenKind::Comma, ",", start}); ++i; continue;
            case '|': out.push_back({TokenKind::Pipe, "|", start}); ++i; continue;
            case '&': out.push_back({TokenKind::Amp, "&", start}); ++i; continue;
            case '!': out.push_back({TokenKind::Bang, "!", start}); ++i; continue;
            case '(': out.push_back({TokenKind::LParen, "(", start}); ++i; continue;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i < text.size() && text[i] == '/') {
                std::size_t slash = i;
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
                    throw ParseError(slash, "expected digits after '/'");
                }
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            }
            out.push_back({TokenKind::Rational, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                ++i;
            }
            out.push_back({TokenKind::Ident, std::string(text.substr(start, i - start)), start});
            continue;
        }
        throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({TokenKind::End, "", text.size()});
    return out;
}

SetExpr parse(std::string_view text) { return Parser(text).run(); }

std::string to_string(const SetExpr& expr) {
    std::string out;
    render(expr, out);
    return out;
}

bool structurally_equal(const SetExpr& a, const SetExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case SetExpr::Kind::IntervalLit: return a.lo == b.lo && a.hi == b.hi;
        case SetExpr::Kind::Builtin: return a.name == b.name;
        case SetExpr::Kind::Complement: return structurally_equal(*a.left, *b.left);
        case SetExpr::Kind::Union:
        case SetExpr::Kind::Intersect:
            return structurally_equal(*a.left, *b.left) &&
                   structurally_equal(*a.right, *b.right);
    }
    return false;
}

MeasurableSet eval_expr(const SetExpr& expr) {
    switch (expr.kind) {
        case SetExpr::Kind::IntervalLit:
            return embed(AlgebraElement::normalize({{expr.lo, expr.hi}}));
        case SetExpr::Kind::Union:
            return limit_union(eval_expr(*expr.left), eval_expr(*expr.right));
        case SetExpr::Kind::Intersect:
            return limit_intersect(eval_expr(*expr.left), eval_expr(*expr.right));
        case SetExpr::Kind::Complement:
            return limit_complement(eval_expr(*expr.left));
        case SetExpr::Kind::Builtin:
            if (expr.name == "cantor3") return builtin_cantor3();
            if (expr.name == "fatcantor") return builtin_fatcantor();
            return builtin_dyadictail();
    }
    throw std::logic_error("unreachable");
}

AlgebraElement cantor3_stage(int n) {
    if (n < 0) throw std::invalid_argument("stage must be nonnegative");
    if (n > 40) throw std::length_error("cantor3 stage limited to 40");
    std::vector<Interval> pieces{{Rat(0), Rat(1)}};
    for (int stage = 0; stage < n; ++stage) {
        std::vector<Interval> next;
        next.reserve(pieces.size() * 2);
        for (const auto& piece : pieces) {
            Rat third = (piece.hi - piece.lo) / Rat(3);
            next.push_back({piece.lo, piece.lo + third});
            next.push_back({piece.hi - third, piece.hi});
        }
        pieces = std::move(next);
    }
    return AlgebraElement::normalize(std::move(pieces));
}

AlgebraElement svc_stage(int n) {
    if (n < 0) throw std::invalid_argument("stage must be nonnegative");
    if (n > 20) throw std::length_error("fat Cantor stage limited to 20");
    std::vector<Interval> pieces{{Rat(0), Rat(1)}};
    for (int stage = 1; stage <= n; ++stage) {
        Rat half_gap = pow2(-(2 * stage + 1));  // half of 4^-stage
        std::vector<Interval> next;
        next.reserve(pieces.size() * 2);
        for (const auto& piece : pieces) {
            Rat center = (piece.lo + piece.hi) / Rat(2);
            next.push_back({piece.lo, center - half_gap});
            next.push_back({center + half_gap, piece.hi});
        }
        pieces = std::move(next);
    }
    return AlgebraElement::normalize(std::move(pieces));
}

MeasurableSet builtin_cantor3() {
    return MeasurableSet([](const Rat& eps) { return cantor3_stage(smallest_cantor3_stage(eps)); });
}

MeasurableSet builtin_fatcantor() {
    return MeasurableSet([](const Rat& eps) { return svc_stage(smallest_svc_stage(eps)); });
}

MeasurableSet builtin_dyadictail() {
    auto family = [](long i) {
        return embed(AlgebraElement::normalize({{pow2(static_cast<int>(-i)),
                                                 pow2(static_cast<int>(-i + 1))}}));
    };
    return countable_union(family, TailBound(dyadic_tail_bound));
}

}  // namespace carat
