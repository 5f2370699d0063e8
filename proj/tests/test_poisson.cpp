#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qma/poisson.hpp"
#include "qma/rewrite.hpp"

using qma::AlgebraElement;
using qma::CPoly;
using qma::GeneratorIndex;
using qma::Monomial;
using qma::MPoly;
using qma::Rational;

namespace {

CPoly y(int n, int i, int j) { return CPoly::generator(n, i, j); }

CPoly random_cpoly(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> deg(0, 2);
    std::uniform_int_distribution<int> idx(1, n);
    std::uniform_int_distribution<int> coeff(1, 6);
    CPoly acc = CPoly::zero(n);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        const int raw = coeff(rng);
        CPoly term = CPoly::constant(n, Rational(raw <= 3 ? raw - 4 : raw - 3));
        const int d = deg(rng);
        for (int s = 0; s < d; ++s) term *= y(n, idx(rng), idx(rng));
        acc += term;
    }
    return acc;
}

// Independent route for the bracket: expand by the Leibniz rule letter by
// letter instead of through partial derivatives.
CPoly leibniz_single(int n, int a_i, int a_j, const MPoly::Expo& v);

CPoly leibniz_mono(int n, const MPoly::Expo& u, const MPoly::Expo& v) {
    int var = -1;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != 0) {
            var = static_cast<int>(i);
            break;
        }
    if (var < 0) return CPoly::zero(n);  // constant on the left
    MPoly::Expo rest = u;
    rest[static_cast<std::size_t>(var)] = static_cast<char>(rest[static_cast<std::size_t>(var)] - 1);
    const int i = var / n + 1, j = var % n + 1;
    CPoly rest_poly(n, MPoly::from_map(n * n, {{rest, Rational(1)}}));
    CPoly v_poly(n, MPoly::from_map(n * n, {{v, Rational(1)}}));
    return y(n, i, j) * leibniz_mono(n, rest, v) + leibniz_single(n, i, j, v) * rest_poly;
}

CPoly leibniz_single(int n, int a_i, int a_j, const MPoly::Expo& v) {
    int var = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) {
            var = static_cast<int>(i);
            break;
        }
    if (var < 0) return CPoly::zero(n);
    MPoly::Expo rest = v;
    rest[static_cast<std::size_t>(var)] = static_cast<char>(rest[static_cast<std::size_t>(var)] - 1);
    const int b_i = var / n + 1, b_j = var % n + 1;
    CPoly rest_poly(n, MPoly::from_map(n * n, {{rest, Rational(1)}}));
    return y(n, b_i, b_j) * leibniz_single(n, a_i, a_j, rest) +
           qma::pbracket_gen(n, a_i, a_j, b_i, b_j) * rest_poly;
}

CPoly leibniz_bracket(const CPoly& f, const CPoly& g) {
    const int n = f.n();
    CPoly acc = CPoly::zero(n);
    for (const auto& [eu, cu] : f.poly().terms())
        for (const auto& [ev, cv] : g.poly().terms()) acc += leibniz_mono(n, eu, ev).scaled(cu * cv);
    return acc;
}

}  // namespace

TEST_CASE("generator brackets") {
    CHECK(qma::pbracket_gen(2, 1, 1, 1, 1).is_zero());
    CHECK(qma::pbracket_gen(2, 1, 1, 1, 2) == y(2, 1, 2) * y(2, 1, 1));
    CHECK(qma::pbracket_gen(2, 1, 2, 2, 1).is_zero());
    CHECK(qma::pbracket_gen(3, 1, 1, 2, 2) == (y(3, 1, 2) * y(3, 2, 1)).scaled(Rational(2)));
}

TEST_CASE("bracket examples") {
    CHECK(qma::pbracket(y(2, 1, 1) * y(2, 2, 2), y(2, 1, 1) * y(2, 2, 2)).is_zero());

    // {y11, y12^2} = 2 y11 y12^2 by the product rule
    CPoly lhs = qma::pbracket(y(2, 1, 1), y(2, 1, 2) * y(2, 1, 2));
    CHECK(lhs == (y(2, 1, 1) * y(2, 1, 2) * y(2, 1, 2)).scaled(Rational(2)));

    // biderivation route agrees with the term-by-term Leibniz route
    CPoly f = y(2, 1, 1) + y(2, 2, 2);
    CPoly g = y(2, 1, 1) * y(2, 2, 2);
    CHECK(qma::pbracket(f, g) == leibniz_bracket(f, g));
}

TEST_CASE("the two bracket routes agree on random samples") {
    std::mt19937_64 rng(50);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        CPoly f = random_cpoly(rng, n), g = random_cpoly(rng, n);
        CHECK(qma::pbracket(f, g) == leibniz_bracket(f, g));
    }
}

TEST_CASE("classical trace powers") {
    CHECK(qma::classical_trace_power(2, 1) == y(2, 1, 1) + y(2, 2, 2));
    CPoly t2 = y(2, 1, 1) * y(2, 1, 1) + (y(2, 1, 2) * y(2, 2, 1)).scaled(Rational(2)) +
               y(2, 2, 2) * y(2, 2, 2);
    CHECK(qma::classical_trace_power(2, 2) == t2);

    CPoly y4 = y(1, 1, 1) * y(1, 1, 1) * y(1, 1, 1) * y(1, 1, 1);
    CHECK(qma::classical_trace_power(1, 4) == y4);
}

TEST_CASE("classical involutivity") {
    CHECK(qma::involution_residual(2, 2, 2).is_zero());
    CHECK(qma::involution_residual(2, 1, 2).is_zero());
    CHECK(qma::involution_residual(3, 2, 3).is_zero());
    for (int k = 1; k <= 3; ++k)
        for (int m = 1; m <= 3; ++m) CHECK(qma::involution_residual(2, k, m).is_zero());
}

TEST_CASE("bracket properties on random samples") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        CPoly f = random_cpoly(rng, n), g = random_cpoly(rng, n), h = random_cpoly(rng, n);
        CHECK((qma::pbracket(f, g) + qma::pbracket(g, f)).is_zero());
        CHECK(qma::pbracket(f, g * h) == qma::pbracket(f, g) * h + g * qma::pbracket(f, h));
        CPoly cyc = qma::pbracket(f, qma::pbracket(g, h)) + qma::pbracket(g, qma::pbracket(h, f)) +
                    qma::pbracket(h, qma::pbracket(f, g));
        CHECK(cyc.is_zero());
    }
}

TEST_CASE("semiclassical residual vanishes on generator pairs") {
    CHECK(qma::semiclassical_generator_residual(2, 1, 1, 1, 1).is_zero());
    CHECK(qma::semiclassical_generator_residual(2, 1, 2, 2, 1).is_zero());

    // both sides equal 2 y12 y21 for the diagonal pair
    AlgebraElement comm = qma::commutator(AlgebraElement::generator(2, 1, 1), AlgebraElement::generator(2, 2, 2));
    CHECK(qma::derivative_shadow(comm) == (y(2, 1, 2) * y(2, 2, 1)).scaled(Rational(2)));
    CHECK(qma::semiclassical_generator_residual(2, 1, 1, 2, 2).is_zero());

    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = 1; l <= n; ++l)
                        CHECK(qma::semiclassical_generator_residual(n, i, j, k, l).is_zero());
}

TEST_CASE("specialization at q = 1 is an algebra map onto the classical shadow") {
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<int> idx(1, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3;
        std::vector<GeneratorIndex> gens_a, gens_b;
        const int la = 1 + static_cast<int>(rng() % 3), lb = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < la; ++t) gens_a.emplace_back(idx(rng), idx(rng));
        for (int t = 0; t < lb; ++t) gens_b.emplace_back(idx(rng), idx(rng));
        AlgebraElement a = qma::reduce_word(Monomial(gens_a), n);
        AlgebraElement b = qma::reduce_word(Monomial(gens_b), n);
        CPoly lhs = qma::classical_shadow(qma::specialize(a * b, Rational(1)));
        CPoly rhs = qma::classical_shadow(qma::specialize(a, Rational(1))) *
                    qma::classical_shadow(qma::specialize(b, Rational(1)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cpoly text form") {
    CPoly p = (y(2, 1, 1) * y(2, 1, 1)).scaled(Rational(1)) + (y(2, 1, 2) * y(2, 2, 1)).scaled(Rational(2));
    CHECK(p.to_string() == "1*y[1,1]^2 + 2*y[1,2]*y[2,1]");
    CHECK(CPoly::zero(2).to_string() == "0");
}
