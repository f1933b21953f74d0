#include <cmath>
#include <random>

#include "doctest.h"
#include "lk/scalar.hpp"

using lk::Scalar;
using lk::ScalarField;

namespace {

Scalar random_scalar(std::mt19937_64& rng, bool with_tags) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
    Scalar s(num(rng), den(rng));
    if (with_tags) {
        s += Scalar(num(rng), den(rng)) * Scalar::sqrt_of(2);
        if (rng() % 2) s += Scalar(num(rng), den(rng)) * Scalar::sqrt_of(3);
    }
    return s;
}

}  // namespace

TEST_CASE("scalar basics and canonical form") {
    Scalar a(3, 4);
    CHECK(a.str() == "3/4");
    CHECK(Scalar::parse("3/4") == a);

    Scalar b = Scalar(1, 2) * Scalar::sqrt_of(2) + Scalar(5);
    CHECK(b.str() == "1/2*sqrt2 + 5");
    CHECK(Scalar::parse("1/2*sqrt2 + 5") == b);
    CHECK(Scalar::parse(" 5+ sqrt2 / 2 ") == b);

    CHECK(Scalar::sqrt_of(8) == Scalar(2) * Scalar::sqrt_of(2));
    CHECK(Scalar::sqrt_of(9) == Scalar(3));
    CHECK(Scalar::sqrt_of(12).str() == "2*sqrt3");
    CHECK((Scalar::sqrt_of(2) * Scalar::sqrt_of(2)) == Scalar(2));
    CHECK((Scalar::sqrt_of(6) * Scalar::sqrt_of(10)) == Scalar(2) * Scalar::sqrt_of(15));

    CHECK(Scalar().str() == "0");
    CHECK((a - a).is_zero());
}

TEST_CASE("scalar field axioms on randomized inputs") {
    std::mt19937_64 rng(20240901);
    for (int iter = 0; iter < 200; ++iter) {
        Scalar x = random_scalar(rng, true);
        Scalar y = random_scalar(rng, true);
        Scalar z = random_scalar(rng, true);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x + (-x) == Scalar());
        if (!x.is_zero()) {
            CHECK(x * x.inverse() == Scalar(1));
            CHECK((y / x) * x == y);
        }
    }
}

TEST_CASE("scalar sign agrees with float evaluation away from zero") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        Scalar x = random_scalar(rng, true);
        double v = x.to_double();
        if (std::fabs(v) > 1e-6) CHECK(x.sign() == (v > 0 ? 1 : -1));
    }
    // exact cancellations
    CHECK((Scalar::sqrt_of(2) * Scalar::sqrt_of(2) - Scalar(2)).sign() == 0);
    // tight but nonzero: sqrt2 - 1.41421356 > 0
    Scalar tight = Scalar::sqrt_of(2) - Scalar(141421356, 100000000);
    CHECK(tight.sign() == 1);
    Scalar tight2 = Scalar::sqrt_of(2) - Scalar(141421357, 100000000);
    CHECK(tight2.sign() == -1);
}

TEST_CASE("scalar parse/print round trip") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        Scalar x = random_scalar(rng, true);
        CHECK(Scalar::parse(x.str()) == x);
    }
    CHECK(Scalar::parse("-sqrt2").str() == "-sqrt2");
    CHECK(Scalar::parse("0").is_zero());
}

TEST_CASE("scalar field declarations") {
    ScalarField q = ScalarField::parse("Q");
    ScalarField q2 = ScalarField::parse("Q(sqrt2)");
    CHECK(q.contains(Scalar(5, 3)));
    CHECK(!q.contains(Scalar::sqrt_of(2)));
    CHECK(q2.contains(Scalar::sqrt_of(2) + Scalar(1)));
    CHECK(!q2.contains(Scalar::sqrt_of(3)));
    CHECK(q2.str() == "Q(sqrt2)");
    CHECK(ScalarField::parse("Q(sqrt2,sqrt3)").contains(Scalar::sqrt_of(6)));
}
