#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qma/exprio.hpp"
#include "qma/minors.hpp"

using qma::AlgebraElement;
using qma::CPoly;
using qma::ExprMode;
using qma::GeneratorIndex;
using qma::LaurentPoly;
using qma::Monomial;
using qma::ParseError;
using qma::Rational;

namespace {

Monomial word(std::initializer_list<std::pair<int, int>> gens) {
    std::vector<GeneratorIndex> v;
    for (auto [i, j] : gens) v.emplace_back(i, j);
    return Monomial(v);
}

LaurentPoly q(long e) { return LaurentPoly::q_power(e); }

}  // namespace

TEST_CASE("parse and evaluate quantum expressions") {
    // q * x12 * x11 straightens to x11 x12
    AlgebraElement e = qma::eval_quantum_expr("q*x[1,2]*x[1,1]", 2);
    CHECK(e == AlgebraElement::monomial_term(2, word({{1, 1}, {1, 2}})));

    AlgebraElement f = qma::eval_quantum_expr("x[2,2]*x[1,1]", 2);
    AlgebraElement expected = AlgebraElement::monomial_term(2, word({{1, 1}, {2, 2}})) +
                              AlgebraElement::monomial_term(2, word({{1, 2}, {2, 1}}), q(-1) - q(1));
    CHECK(f == expected);

    CHECK(qma::eval_quantum_expr("1", 2) == AlgebraElement::one(2));
    CHECK(qma::eval_quantum_expr("x[1,1]^0", 2) == AlgebraElement::one(2));
    CHECK(qma::eval_quantum_expr("(x[1,1]+x[2,2])^2", 2) ==
          qma::eval_quantum_expr("x[1,1]^2 + x[1,1]*x[2,2] + x[2,2]*x[1,1] + x[2,2]^2", 2));
    CHECK(qma::eval_quantum_expr("q^-1 * x[1,1] - 1/2", 2) ==
          AlgebraElement::generator(2, 1, 1).scaled(q(-1)) -
              AlgebraElement::constant(2, LaurentPoly(Rational(1, 2))));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(qma::parse("x[3,1]", 2, ExprMode::quantum), ParseError);
    CHECK_THROWS_AS(qma::parse("x[1,2", 2, ExprMode::quantum), ParseError);
    CHECK_THROWS_AS(qma::parse("x[1,2] +", 2, ExprMode::quantum), ParseError);
    CHECK_THROWS_AS(qma::parse("1/0", 2, ExprMode::quantum), ParseError);
    CHECK_THROWS_AS(qma::parse("x[1,1]^-1", 2, ExprMode::quantum), ParseError);
    CHECK_THROWS_AS(qma::parse("", 2, ExprMode::quantum), ParseError);

    try {
        qma::parse("x[1,1] * & x[2,2]", 2, ExprMode::quantum);
        FAIL("expected a ParseError");
    } catch (const ParseError& err) {
        CHECK(err.pos == 9);
    }
}

TEST_CASE("generator family must match the mode") {
    CHECK_THROWS_AS(qma::parse("y[1,1]", 2, ExprMode::quantum), ParseError);
    CHECK_THROWS_AS(qma::parse("x[1,1]", 2, ExprMode::classical), ParseError);
    CHECK_THROWS_AS(qma::parse("q*y[1,1]", 2, ExprMode::classical), ParseError);
}

TEST_CASE("classical expressions") {
    CPoly p = qma::eval_classical_expr("y[1,1]^2 + 2*y[1,2]*y[2,1]", 2);
    CPoly expected = CPoly::generator(2, 1, 1) * CPoly::generator(2, 1, 1) +
                     (CPoly::generator(2, 1, 2) * CPoly::generator(2, 2, 1)).scaled(Rational(2));
    CHECK(p == expected);
    CHECK(qma::eval_classical_expr("3/4", 2) == CPoly::constant(2, Rational(3, 4)));
}

TEST_CASE("canonical forms round-trip through the parser") {
    // quantum side: an element with Laurent coefficients of both signs
    AlgebraElement e = qma::sigma(2, 2) + AlgebraElement::generator(2, 1, 2).scaled(q(-2) - q(3));
    AlgebraElement back = qma::eval_quantum_expr(e.to_string(), 2);
    CHECK(back == e);
    CHECK(back.to_string() == e.to_string());

    // classical side
    CPoly p = qma::classical_trace_power(2, 2) - CPoly::constant(2, Rational(7, 3));
    CPoly pback = qma::eval_classical_expr(p.to_string(), 2);
    CHECK(pback == p);
    CHECK(pback.to_string() == p.to_string());
}

TEST_CASE("round-trip on random elements") {
    std::mt19937_64 rng(60);
    std::uniform_int_distribution<int> idx(1, 3);
    std::uniform_int_distribution<int> len(1, 4);
    std::uniform_int_distribution<long> expo(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3;
        AlgebraElement e = AlgebraElement::zero(n);
        const int nwords = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < nwords; ++t) {
            std::vector<GeneratorIndex> gens;
            const int l = len(rng);
            for (int s = 0; s < l; ++s) gens.emplace_back(idx(rng), idx(rng));
            e += qma::reduce_word(Monomial(gens), n).scaled(q(expo(rng)));
        }
        AlgebraElement back = qma::eval_quantum_expr(e.to_string(), n);
        CHECK(back == e);
    }
}

TEST_CASE("products keep factor order in quantum mode") {
    AlgebraElement ab = qma::eval_quantum_expr("x[2,2]*x[1,1]", 2);
    AlgebraElement ba = qma::eval_quantum_expr("x[1,1]*x[2,2]", 2);
    CHECK(!(ab == ba));
}
