#pragma once

#include "carat/limit_points.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace carat {

/// Parse failure with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error(message + " (at byte " + std::to_string(position) + ")"),
          position_(position),
          message_(message) {}

    std::size_t position() const { return position_; }
    const std::string& message() const { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

enum class TokenKind {
    LBracket,   // [
    RParen,     // ) — closes both interval literals and groups
    Comma,
    Pipe,
    Amp,
    Bang,
    LParen,
    Rational,
    Ident,
    End,
};

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t position;  // byte offset into the input
};

/// Tokenizes an expression. Throws ParseError on an unexpected character.
std::vector<Token> tokenize(std::string_view text);

/// AST of the set-expression language.
struct SetExpr {
    enum class Kind { IntervalLit, Union, Intersect, Complement, Builtin };

    Kind kind;
    Rat lo, hi;                      // IntervalLit
    std::string name;                // Builtin: cantor3 | fatcantor | dyadictail
    std::unique_ptr<SetExpr> left;   // Union/Intersect; Complement child
    std::unique_ptr<SetExpr> right;  // Union/Intersect
};

bool structurally_equal(const SetExpr& a, const SetExpr& b);

/// Grammar:
///   expr   := term { "|" term }
///   term   := factor { "&" factor }
///   factor := "!" factor | atom
///   atom   := "[" rat "," rat ")" | IDENT | "(" expr ")"
///   rat    := INT | INT "/" INT
/// Interval endpoints must lie in [0,1] with lo < hi; both checked at parse
/// time. Throws ParseError with a byte offset on any failure.
SetExpr parse(std::string_view text);

/// Renders an AST back to source form; reparses to a structurally equal tree.
std::string to_string(const SetExpr& expr);

/// Compiles an AST into a measurable-set oracle: interval literals embed,
/// the connectives map to the corresponding limit constructions, builtins to
/// their oracles.
MeasurableSet eval_expr(const SetExpr& expr);

/// Stage n of the middle-thirds construction: 2^n intervals of total length
/// (2/3)^n. Throws std::length_error for n > 40.
AlgebraElement cantor3_stage(int n);

/// Stage n of the fat Cantor construction: at stage k a centered open middle
/// of length 4^-k is removed from each of the 2^(k-1) pieces. Total length
/// 1/2 + 2^-(n+1). Throws std::length_error for n > 20.
AlgebraElement svc_stage(int n);

/// Builtin oracles. cantor3 answers eps with the first stage n whose
/// distance (2/3)^n to the limit set is at most eps; fatcantor likewise with
/// 2^-(n+1); dyadictail is the countable union of the dyadic intervals
/// [2^-i, 2^-(i-1)) with tail bound N_L = ceil(log2(2L)).
MeasurableSet builtin_cantor3();
MeasurableSet builtin_fatcantor();
MeasurableSet builtin_dyadictail();

}  // namespace carat
