#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "carat/set_dsl.hpp"

#include <stdexcept>

using namespace carat;

namespace {

// Exact algebra-side evaluation of interval-literal-only expressions; the
// independent route the homomorphism test checks the oracles against.
AlgebraElement eval_exact(const SetExpr& expr) {
    switch (expr.kind) {
        case SetExpr::Kind::IntervalLit:
            return AlgebraElement::normalize({{expr.lo, expr.hi}});
        case SetExpr::Kind::Union:
            return set_union(eval_exact(*expr.left), eval_exact(*expr.right));
        case SetExpr::Kind::Intersect:
            return set_intersect(eval_exact(*expr.left), eval_exact(*expr.right));
        case SetExpr::Kind::Complement:
            return set_complement(eval_exact(*expr.left));
        case SetExpr::Kind::Builtin:
            throw std::logic_error("builtins have no exact algebra value");
    }
    throw std::logic_error("unreachable");
}

std::size_t position_of_failure(std::string_view text) {
    try {
        (void)parse(text);
    } catch (const ParseError& err) {
        return err.position();
    }
    FAIL("expected a parse error for: ", text);
    return 0;
}

}  // namespace

TEST_CASE("tokenizer positions are byte offsets") {
    auto tokens = tokenize("[0,1/2) | x");
    REQUIRE(tokens.size() == 8);  // incl. End
    CHECK(tokens[0].kind == TokenKind::LBracket);
    CHECK(tokens[0].position == 0);
    CHECK(tokens[2].kind == TokenKind::Comma);
    CHECK(tokens[3].lexeme == "1/2");
    CHECK(tokens[3].position == 3);
    CHECK(tokens[5].kind == TokenKind::Pipe);
    CHECK(tokens[5].position == 8);
    CHECK(tokens[6].kind == TokenKind::Ident);
    CHECK(tokens[7].kind == TokenKind::End);
    CHECK_THROWS_AS(tokenize("[0,1/2) @"), ParseError);
}

TEST_CASE("parse examples") {
    auto u = parse("[0,1/2) | [3/4,1)");
    REQUIRE(u.kind == SetExpr::Kind::Union);
    CHECK(u.left->kind == SetExpr::Kind::IntervalLit);
    CHECK(u.left->lo == Rat(0));
    CHECK(u.left->hi == Rat(1, 2));
    CHECK(u.right->lo == Rat(3, 4));
    CHECK(u.right->hi == Rat(1));

    auto c = parse("!([0,1/3) & cantor3)");
    REQUIRE(c.kind == SetExpr::Kind::Complement);
    REQUIRE(c.left->kind == SetExpr::Kind::Intersect);
    CHECK(c.left->left->kind == SetExpr::Kind::IntervalLit);
    CHECK(c.left->right->kind == SetExpr::Kind::Builtin);
    CHECK(c.left->right->name == "cantor3");
}

TEST_CASE("precedence and associativity") {
    // ! binds tighter than &, & tighter than |; both binary ops left-assoc
    auto e = parse("!cantor3 & [0,1/2) | fatcantor & dyadictail | [1/2,1)");
    REQUIRE(e.kind == SetExpr::Kind::Union);
    REQUIRE(e.left->kind == SetExpr::Kind::Union);
    CHECK(e.right->kind == SetExpr::Kind::IntervalLit);
    REQUIRE(e.left->left->kind == SetExpr::Kind::Intersect);
    CHECK(e.left->left->left->kind == SetExpr::Kind::Complement);
    CHECK(e.left->right->kind == SetExpr::Kind::Intersect);
}

TEST_CASE("parse errors carry byte positions") {
    CHECK(position_of_failure("[1/2,1/4)") == 0);
    CHECK(position_of_failure("[0,1/2) | [3/2,2)") == 10);
    CHECK(position_of_failure("[0,1/2) garbage") == 8);
    CHECK(position_of_failure("[0,1/2") == 6);
    CHECK(position_of_failure("nope") == 0);
    CHECK(position_of_failure("[0,1/)") == 4);
    CHECK(position_of_failure("") == 0);
    CHECK(position_of_failure("[0,1/2) &") == 9);
}

TEST_CASE("serialization round trip on golden inputs") {
    for (const char* text : {
             "[0,1/2)",
             "[0,1/2) | [3/4,1)",
             "!([0,1/3) & cantor3)",
             "!cantor3 & ([0,1/2) | fatcantor)",
             "dyadictail | !( [1/8, 7/8) & !fatcantor )",
             "([0,1) & [1/3,2/3)) | !dyadictail",
         }) {
        auto first = parse(text);
        auto second = parse(to_string(first));
        CHECK(structurally_equal(first, second));
    }
}

TEST_CASE("homomorphism: oracle measure brackets the exact premeasure") {
    for (const char* text : {
             "[0,1/2)",
             "[0,1/2) | [1/4,3/4)",
             "!([0,1/3) & [1/4,1))",
             "([0,1/8) | [1/2,5/8)) & ![1/16,9/16)",
         }) {
        auto expr = parse(text);
        Rat exact = premeasure(eval_exact(expr));
        auto oracle = eval_expr(expr);
        for (const Rat& eps : {Rat(1, 4), Rat(1, 64), Rat(1, 1024)}) {
            CHECK(measure_with_error(oracle, eps).contains(exact));
        }
    }
}

TEST_CASE("cantor3_stage examples") {
    CHECK(cantor3_stage(0) == AlgebraElement::full_set());
    CHECK(cantor3_stage(1) ==
          AlgebraElement::normalize({{Rat(0), Rat(1, 3)}, {Rat(2, 3), Rat(1)}}));
    CHECK(premeasure(cantor3_stage(2)) == Rat(4, 9));
    CHECK(cantor3_stage(2).to_string() == "0/1,1/9 2/9,1/3 2/3,7/9 8/9,1/1");
    CHECK_THROWS_AS(cantor3_stage(41), std::length_error);
    CHECK_THROWS_AS(cantor3_stage(-1), std::invalid_argument);
}

TEST_CASE("svc_stage examples") {
    CHECK(svc_stage(0) == AlgebraElement::full_set());
    CHECK(svc_stage(1) ==
          AlgebraElement::normalize({{Rat(0), Rat(3, 8)}, {Rat(5, 8), Rat(1)}}));
    CHECK(premeasure(svc_stage(2)) == Rat(5, 8));
    CHECK_THROWS_AS(svc_stage(21), std::length_error);
}

TEST_CASE("stage sequences are decreasing and premeasures match closed forms") {
    for (int n = 0; n <= 12; ++n) {
        CHECK(is_subset(cantor3_stage(n + 1), cantor3_stage(n)));
        Rat c3(1);
        for (int k = 0; k < n; ++k) c3 = c3 * Rat(2, 3);
        CHECK(premeasure(cantor3_stage(n)) == c3);
    }
    for (int n = 0; n <= 10; ++n) {
        CHECK(is_subset(svc_stage(n + 1), svc_stage(n)));
        CHECK(premeasure(svc_stage(n)) == Rat(1, 2) + pow2(-(n + 1)));
    }
}

TEST_CASE("stage distances realize the stated modulus") {
    for (int n = 0; n <= 12; ++n) {
        for (int m = 0; m <= 12; ++m) {
            Rat bound(1);
            for (int k = 0; k < std::min(n, m); ++k) bound = bound * Rat(2, 3);
            CHECK(distance(cantor3_stage(n), cantor3_stage(m)) <= bound);
        }
    }
}

TEST_CASE("builtin oracles answer with the cheapest adequate stage") {
    CHECK(builtin_cantor3().approx(Rat(1, 2)) == cantor3_stage(2));
    CHECK(builtin_cantor3().approx(Rat(2, 3)) == cantor3_stage(1));
    CHECK(builtin_fatcantor().approx(Rat(1, 4)) == svc_stage(1));
    CHECK(builtin_fatcantor().approx(Rat(1, 2)) == svc_stage(0));
    CHECK(measure_with_error(eval_expr(parse("fatcantor")), Rat(1, 1000)).contains(Rat(1, 2)));
    CHECK(measure_with_error(eval_expr(parse("!cantor3")), Rat(1, 1000)).contains(Rat(1)));
    CHECK(measure_with_error(eval_expr(parse("[0,1/2)")), Rat(1, 100)).contains(Rat(1, 2)));
}
