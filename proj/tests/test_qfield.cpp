#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace waring;
using waring::testing::random_elem;
using waring::testing::random_nonzero;

TEST_CASE("rationals parse and print in lowest terms")
{
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(parse_rational("-2/6")) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("field handles are interned per tau and reject rational cubes")
{
    CHECK(Field::with_tau(Rational(-2)) == Field::with_tau(Rational(-4, 2)));
    CHECK_FALSE(Field::with_tau(Rational(-2)) == Field::with_tau(Rational(-1, 2)));
    CHECK_THROWS_AS(Field::with_tau(Rational(8)), std::invalid_argument);
    CHECK_THROWS_AS(Field::with_tau(Rational(-1, 27)), std::invalid_argument);
    CHECK_THROWS_AS(Field::with_tau(Rational(0)), std::invalid_argument);
}

TEST_CASE("defining relations")
{
    for (Rational tau : {Rational(-2), Rational(-1, 2)}) {
        Field f = Field::with_tau(tau);
        const FieldElem z = f.zeta(), a = f.cube_root(), one = f.one();
        CHECK(z + z * z == -one);
        CHECK(z * (z * z) == one);
        CHECK(a * (a * a) == f.from_rational(tau));
        CHECK((one + z) * (one + z * z) == one);
        CHECK(z.inv() == z * z);
        CHECK(a.inv() == (a * a).scaled(1 / tau));
        CHECK(f.from_int(2).inv() == f.from_rational(Rational(1, 2)));
        CHECK(z.conjugate() == -one - z);
        CHECK(a.conjugate() == a);
        for (const FieldElem& mu : {one, z, z * z}) CHECK(mu.pow(3).is_one());

        const FieldElem half = f.from_rational(Rational(1, 2));
        CHECK((half + a) + (half - a) == one);
        CHECK(a + f.zero() == a);
    }
}

TEST_CASE("field axioms on random elements")
{
    Field f = Field::with_tau(Rational(-2));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        FieldElem x = random_elem(f, rng), y = random_elem(f, rng), w = random_elem(f, rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + w == x + (y + w));
        CHECK((x * y) * w == x * (y * w));
        CHECK(x * (y + w) == x * y + x * w);
        CHECK(x - x == f.zero());
        FieldElem nz = random_nonzero(f, rng);
        CHECK((nz * nz.inv()).is_one());
        CHECK((x / nz) * nz == x);

        FieldElem acc = x;
        acc.add_product(y, w);
        CHECK(acc == x + y * w);
    }
}

TEST_CASE("conjugation is an involutive automorphism")
{
    Field f = Field::with_tau(Rational(-1, 2));
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        FieldElem x = random_elem(f, rng), y = random_elem(f, rng);
        CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
        CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
        CHECK(x.conjugate().conjugate() == x);
    }
}

TEST_CASE("inverse of zero is an error")
{
    Field f = Field::with_tau(Rational(-2));
    CHECK_THROWS_AS(f.zero().inv(), std::domain_error);
}

TEST_CASE("mixing tau-configurations is a usage error")
{
    Field f = Field::with_tau(Rational(-2)), g = Field::with_tau(Rational(-1, 2));
    CHECK_THROWS_AS(f.one() + g.one(), std::logic_error);
    CHECK_THROWS_AS(f.one() * g.one(), std::logic_error);
}

TEST_CASE("complex embedding is a ring homomorphism up to rounding")
{
    Field f = Field::with_tau(Rational(-2));
    CHECK(std::abs(f.one().embed_complex() - std::complex<double>(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(f.zeta().embed_complex() - std::complex<double>(-0.5, std::sqrt(3.0) / 2)) < 1e-15);
    CHECK(std::abs(f.cube_root().embed_complex() - std::complex<double>(-std::cbrt(2.0), 0.0)) < 1e-15);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        FieldElem x = random_elem(f, rng), y = random_elem(f, rng);
        auto ex = x.embed_complex(), ey = y.embed_complex();
        auto close = [](std::complex<double> u, std::complex<double> v) {
            return std::abs(u - v) <= 1e-10 * std::max(1.0, std::abs(v));
        };
        CHECK(close((x * y).embed_complex(), ex * ey));
        CHECK(close((x + y).embed_complex(), ex + ey));
        CHECK(close(x.conjugate().embed_complex(), std::conj(ex)));
        CHECK(std::abs((x * y).embed_complex() - ex * ey) < 1e-12 * std::max(1.0, std::abs(ex * ey)));
    }
}

TEST_CASE("to_string is readable")
{
    Field f = Field::with_tau(Rational(-2));
    CHECK(f.zero().to_string() == "0");
    CHECK(f.one().to_string() == "1");
    CHECK_FALSE((f.one() - f.zeta() * f.cube_root()).to_string().empty());
}
