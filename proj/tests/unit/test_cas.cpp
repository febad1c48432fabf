#include <random>

#include "doctest.h"
#include "qloop/scalar.hpp"

using namespace qloop;

namespace {

Scalar random_poly(std::mt19937_64& rng, int terms)
{
    std::uniform_int_distribution<int> ce(-3, 3), ee(-2, 2);
    std::vector<QPoly::Term> t;
    for (int i = 0; i < terms; ++i) {
        int c = ce(rng);
        if (c == 0) c = 1;
        t.push_back({Exp{ee(rng), ee(rng), ee(rng), 0}, mpq_class(c)});
    }
    return Scalar(QPoly::from_terms(std::move(t)));
}

Scalar random_scalar(std::mt19937_64& rng)
{
    Scalar n = random_poly(rng, 1 + rng() % 3);
    Scalar d = random_poly(rng, 1 + rng() % 3);
    if (d.is_zero()) d = Scalar(1);
    return n / d;
}

}  // namespace

TEST_CASE("q_number small values")
{
    CHECK(q_number(0).is_zero());
    CHECK(q_number(1) == Scalar(1));
    CHECK(q_number(2) == Scalar::q(1) + Scalar::q(-1));
    CHECK(q_number(-2) == -q_number(2));
    for (int m = -10; m <= 10; ++m) CHECK(q_number(m) * q_minus_qinv() == Scalar::q(m) - Scalar::q(-m));
}

TEST_CASE("q_binomial")
{
    CHECK(q_binomial(1, 2).is_zero());
    for (int n = 0; n < 6; ++n) CHECK(q_binomial(n, 0) == Scalar(1));
    CHECK(q_binomial(2, 1) == Scalar::q(1) + Scalar::q(-1));
    CHECK_THROWS(q_binomial(3, -1));
    for (int m = 0; m <= 8; ++m)
        for (int p = 0; p <= m; ++p) {
            CHECK(q_binomial(m, p) == q_binomial(m, m - p));
            CHECK(q_binomial(m, p).is_polynomial());
        }
    for (int m = 1; m <= 8; ++m)
        for (int p = 1; p <= m; ++p)
            CHECK(q_binomial(m, p) ==
                  Scalar::q(p) * q_binomial(m - 1, p) + Scalar::q(p - m) * q_binomial(m - 1, p - 1));
}

TEST_CASE("spectral q-number")
{
    Scalar d = q_minus_qinv();
    CHECK(q_number_spectral(0) == (Scalar::u() - 1) / d);
    CHECK(q_number_spectral(1) == (Scalar::q(1) * Scalar::u() - Scalar::q(-1)) / d);
    for (int m = -4; m <= 4; ++m) CHECK(q_number_spectral(m).substitute(U, exp_zero()) == q_number(m));
}

TEST_CASE("q-exponential coefficients")
{
    CHECK(q_exponential_truncated(1, 0).size() == 1);
    auto c1 = q_exponential_truncated(-1, 1);
    CHECK(c1[0] == Scalar(1));
    CHECK(c1[1] == Scalar(1));
    auto c2 = q_exponential_truncated(1, 2);
    CHECK(c2[2] == Scalar::q(-1) / q_factorial(2));
}

TEST_CASE("substitute and evaluate")
{
    CHECK(q_number(2).invert_q() == q_number(2));
    CHECK(Scalar::u().invert_var(U) == Scalar::u(-1));
    Scalar s = q_number_spectral(1).invert_q().invert_var(U);
    Scalar qi = Scalar::q(-1), q = Scalar::q(1), ui = Scalar::u(-1);
    CHECK(s == (qi * ui - q) / (qi - q));
    Point p;
    p.qh = 2;  // q = 4
    CHECK(q_number(2).evaluate(p) == mpq_class(17, 4));
    p.qh = 0;
    CHECK_THROWS_AS(q_number(2).evaluate(p), PoleAtPoint);
    Point p2;
    p2.u = 1;
    CHECK(q_number(0).evaluate(p2) == 0);
    CHECK_THROWS_AS((Scalar(1) / (Scalar::u() - 1)).evaluate(p2), PoleAtPoint);
}

TEST_CASE("q_number(2) at q = 2")
{
    Point p;
    p.q = mpq_class(2);
    CHECK(q_number(2).evaluate(p) == mpq_class(5, 2));
    CHECK_THROWS(Scalar::qh(1).evaluate(p));
}

TEST_CASE("field axioms on fuzzed scalars")
{
    std::mt19937_64 rng(12345);
    for (int it = 0; it < 1000; ++it) {
        Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x - x).is_zero());
        if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
    CHECK(gcd_fallback_count() == 0);
}

TEST_CASE("substitution is an involutive ring morphism")
{
    std::mt19937_64 rng(777);
    for (int it = 0; it < 200; ++it) {
        Scalar x = random_scalar(rng), y = random_scalar(rng);
        for (Var v : {QH, U, A}) {
            CHECK(x.invert_var(v).invert_var(v) == x);
            CHECK((x * y).invert_var(v) == x.invert_var(v) * y.invert_var(v));
            CHECK((x + y).invert_var(v) == x.invert_var(v) + y.invert_var(v));
        }
    }
}

TEST_CASE("normal form is canonical")
{
    Scalar a = (Scalar::u() - 1) * (Scalar::q(1) + Scalar::a()) / ((Scalar::u() - 1) * Scalar::q(3));
    Scalar b = (Scalar::q(1) + Scalar::a()) * Scalar::q(-3);
    CHECK(a.num() == b.num());
    CHECK(a.den() == b.den());
    CHECK(a.is_polynomial());
}

TEST_CASE("power series in u")
{
    Scalar s = Scalar(1) / (Scalar(1) - Scalar::u() * Scalar::q(2));
    auto c = s.series(U, 4);
    for (int k = 0; k <= 4; ++k) CHECK(c[k] == Scalar::q(2 * k));
}

TEST_CASE("gcd of products")
{
    Scalar f = Scalar::q(1) * Scalar::u() - Scalar::q(-1);
    Scalar g = Scalar::a() * Scalar::q(2) + Scalar::u(2) - 3;
    Scalar h = Scalar::q(3) - Scalar::u() * Scalar::a();
    QPoly G = poly_gcd_q((f * g * g).num(), (h * g).num());
    Scalar ratio = Scalar(G) / g;
    CHECK(ratio.is_monomial());
}
