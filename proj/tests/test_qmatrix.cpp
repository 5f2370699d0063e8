#include <catch2/catch_amalgamated.hpp>

#include "qma/qmatrix.hpp"

using qma::AlgebraElement;
using qma::GeneratorIndex;
using qma::LaurentPoly;
using qma::Monomial;
using qma::QMatrix;

namespace {

Monomial word(std::initializer_list<std::pair<int, int>> gens) {
    std::vector<GeneratorIndex> v;
    for (auto [i, j] : gens) v.emplace_back(i, j);
    return Monomial(v);
}

LaurentPoly q(long e) { return LaurentPoly::q_power(e); }

}  // namespace

TEST_CASE("star of identities collapses to the identity") {
    const QMatrix i2 = QMatrix::identity(2);
    CHECK(star(i2, i2) == i2);
    const QMatrix i3 = QMatrix::identity(3);
    CHECK(star(i3, i3) == i3);
}

TEST_CASE("star(X, X) entries for n = 2") {
    const QMatrix x = QMatrix::generic(2);
    const QMatrix xx = star(x, x);

    AlgebraElement e11 = AlgebraElement::monomial_term(2, word({{1, 1}, {1, 1}})) +
                         AlgebraElement::monomial_term(2, word({{1, 2}, {2, 1}}), q(1));
    CHECK(xx.at(1, 1) == e11);

    // theta(2,1) = -1 weight; x21 x12 reduces to x12 x21
    AlgebraElement e22 = AlgebraElement::monomial_term(2, word({{2, 2}, {2, 2}})) +
                         AlgebraElement::monomial_term(2, word({{1, 2}, {2, 1}}), q(-1));
    CHECK(xx.at(2, 2) == e22);
}

TEST_CASE("quantum powers") {
    const QMatrix x = QMatrix::generic(2);
    CHECK(qpower(x, 0) == QMatrix::identity(2));
    CHECK(qpower(x, 1) == x);
    CHECK_THROWS_AS(qpower(x, -1), std::invalid_argument);

    // 1 x 1: the algebra is commutative and theta(1,1) = 0
    const QMatrix y = QMatrix::generic(1);
    const QMatrix y4 = qpower(y, 4);
    CHECK(y4.at(1, 1) ==
          AlgebraElement::monomial_term(1, word({{1, 1}, {1, 1}, {1, 1}, {1, 1}})));
}

TEST_CASE("trace") {
    CHECK(trace(QMatrix::identity(3)) == AlgebraElement::constant(3, LaurentPoly(3)));

    const QMatrix x = QMatrix::generic(2);
    CHECK(trace(x) == AlgebraElement::generator(2, 1, 1) + AlgebraElement::generator(2, 2, 2));

    AlgebraElement t2 = AlgebraElement::monomial_term(2, word({{1, 1}, {1, 1}})) +
                        AlgebraElement::monomial_term(2, word({{2, 2}, {2, 2}})) +
                        AlgebraElement::monomial_term(2, word({{1, 2}, {2, 1}}), q(1) + q(-1));
    CHECK(trace(qpower(x, 2)) == t2);
}

TEST_CASE("right scalar multiplication") {
    const QMatrix x = QMatrix::generic(2);
    CHECK(right_scalar_mul(x, AlgebraElement::one(2)) == x);

    const AlgebraElement s = AlgebraElement::generator(2, 1, 1);
    const QMatrix is = right_scalar_mul(QMatrix::identity(2), s);
    CHECK(is.at(1, 1) == s);
    CHECK(is.at(2, 2) == s);
    CHECK(is.at(1, 2).is_zero());

    // x12 * x11 straightens to q^{-1} x11 x12
    const QMatrix xs = right_scalar_mul(x, s);
    CHECK(xs.at(1, 2) == AlgebraElement::monomial_term(2, word({{1, 1}, {1, 2}}), q(-1)));
}

TEST_CASE("star is not associative") {
    const QMatrix x = QMatrix::generic(2);
    const QMatrix left = star(star(x, x), x);
    const QMatrix right = star(x, star(x, x));
    bool differs = false;
    for (int i = 1; i <= 2 && !differs; ++i)
        for (int j = 1; j <= 2 && !differs; ++j)
            if (!(left.at(i, j) == right.at(i, j))) differs = true;
    CHECK(differs);
}

TEST_CASE("star with the identity fixes diagonal matrices with central entries") {
    QMatrix a(2);
    a.at(1, 1) = AlgebraElement::constant(2, q(2) + LaurentPoly(3));
    a.at(2, 2) = AlgebraElement::constant(2, q(-1));
    CHECK(star(a, QMatrix::identity(2)) == a);
    CHECK(star(QMatrix::identity(2), a) == a);
}

TEST_CASE("matrix addition is associative and commutative; trace is linear") {
    const QMatrix x = QMatrix::generic(2);
    const QMatrix xx = star(x, x);
    const QMatrix i = QMatrix::identity(2);
    CHECK((x + xx) + i == x + (xx + i));
    CHECK(x + xx == xx + x);
    CHECK(trace(x + xx) == trace(x) + trace(xx));
}

TEST_CASE("size mismatch errors") {
    CHECK_THROWS_AS(star(QMatrix::generic(2), QMatrix::generic(3)), std::invalid_argument);
    CHECK_THROWS_AS(right_scalar_mul(QMatrix::generic(2), AlgebraElement::one(3)), std::invalid_argument);
    CHECK_THROWS_AS(QMatrix::generic(2) + QMatrix::generic(3), std::invalid_argument);
}
