#include "doctest.h"

#include "dhj/bounds.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace dhj;

namespace {

OracleTable nine()
{
    OracleTable t;
    t.set_dhj(2, Rational(1, 4), 9);
    return t;
}

// ceil(beta^-1 (k+1+m)^M1 (k+1)^(M1-m) M1), computed directly.
mpz_class f_formula(int m, const mpq_class& beta, int k, int M1)
{
    mpq_class v = mpq_class(oracle::zpow(k + 1 + m, M1) * oracle::zpow(k + 1, M1 - m) * M1) / beta;
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return out;
}

std::string missing_key(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const MissingOracleValue& e) {
        return e.key();
    }
    return {};
}

} // namespace

TEST_CASE("base parameters")
{
    auto p = base_params(2, 1, nine());
    CHECK(p.m0 == 9);
    mpq_class theta = mpq_class(1, 4) / mpq_class(oracle::zpow(3, 9) - oracle::zpow(2, 9));
    CHECK(p.theta == theta);
    CHECK(p.theta == Rational(1, 76684));
    CHECK(p.eta == theta / 48);
    CHECK(p.eta == Rational(1, 3680832));
    CHECK(p.gamma == Rational(1) / (2 * mpz_class(3680832) * mpz_class(3680832)));
    CHECK(p.lambda == Rational(3, 2));
    // least t with (3/2)^t >= 1/eta
    int t = 0;
    mpq_class power = 1;
    while (power * p.eta < 1) {
        power *= mpq_class(3, 2);
        ++t;
    }
    CHECK(p.M0 == std::max(9, t));
    CHECK(p.beta() == p.gamma * p.gamma / 8);
    CHECK(p.eta < p.theta / 2);
    CHECK(missing_key([] { base_params(2, 1, OracleTable{}); }) == "dhj(2, 1/4)");
}

TEST_CASE("n_of")
{
    CHECK(n_of(1, Rational(1, 2), 2).value() == 6);
    CHECK(n_of(1, 1, 2).value() == 3);
    CHECK(n_of(9, Rational(1, 2), 2).value() == 2 * oracle::zpow(3, 9) * 9);
    CHECK(n_of(9, Rational(1, 2), 2).value() == 354294);
}

TEST_CASE("mdhj recursion")
{
    OracleTable t;
    t.set_dhj(2, Rational(1, 2), 3);
    CHECK(mdhj_bound(2, 1, Rational(1, 2), t).value() == 3);
    CHECK(missing_key([&] { mdhj_bound(2, 2, Rational(1, 2), nine()); }) == "dhj(2, 1/78732)");
    CHECK(Rational(1, 2) / 2 / oracle::zpow(3, 9) == Rational(1, 78732));
    auto stub = nine();
    stub.set_dhj(2, Rational(1, 78732), 5);
    CHECK(mdhj_bound(2, 2, Rational(1, 2), stub).value() == 14);
    CHECK(missing_key([] { mdhj_bound(2, 1, Rational(1, 2), OracleTable{}); }) == "dhj(2, 1/2)");
    // evaluation is deterministic
    CHECK(mdhj_bound(2, 2, Rational(1, 2), stub).value() == mdhj_bound(2, 2, Rational(1, 2), stub).value());
}

TEST_CASE("mdhj star")
{
    auto v = mdhj_star_bound(2, 1, Rational(1, 2), nine());
    CHECK(v.value() == 4 * oracle::zpow(3, 9) * 9);
    CHECK(v.value() == 708588);
    CHECK(mpz_divisible_ui_p(v.integer().get_mpz_t(), 9));
    CHECK_THROWS_AS(mdhj_star_bound(2, 1, 2, nine()), std::invalid_argument);
}

TEST_CASE("F and its iterates")
{
    CHECK(F_of(1, Rational(1, 2), 2, BigQuantity(2)).value() == 192);
    CHECK(f_formula(1, mpq_class(1, 2), 2, 2) == 192);
    for (int m = 1; m <= 3; ++m)
        CHECK(F_of(m, 1, 2, BigQuantity(m)).value() == oracle::zpow(3 + m, m) * m);
    for (int m = 1; m <= 3; ++m)
        for (int M1 = m; M1 <= m + 2; ++M1)
            for (int b = 1; b <= 8; b *= 2) {
                Rational beta(1, b);
                auto f = F_of(m, beta, 2, BigQuantity(M1));
                CHECK(f.value() == f_formula(m, beta, 2, M1));
                CHECK(F_of(m, beta / 2, 2, BigQuantity(M1)) >= f);
            }
    M1Provider stub = [](const BigQuantity& m) { return m + BigQuantity(1); };
    auto once = F_of(1, Rational(1, 2), 2, stub);
    CHECK(F_iter(1, 1, Rational(1, 2), 2, stub).value() == once.value());
    auto twice = F_iter(2, 1, Rational(1, 2), 2, stub);
    CHECK(twice.value() == F_of(once, Rational(1, 2), 2, stub).value());
    CHECK(once.value() == f_formula(1, mpq_class(1, 2), 2, 2));
}

TEST_CASE("N_of reports the missing gr entry")
{
    OracleTable t;
    t.set_dhj_default(2, 3);
    std::string key = missing_key([&] { N_of(2, 1, 1, t); });
    CHECK(key.rfind("gr(2, ", 0) == 0);
}

TEST_CASE("oracle table parsing")
{
    std::istringstream in("dhj 2 1/4 = 9\ngr 2 1 = 3\n");
    auto t = OracleTable::parse(in);
    CHECK(*t.dhj(2, Rational(1, 4)) == 9);
    CHECK_FALSE(t.dhj(2, Rational(1, 3)));
    std::istringstream bad("dhj 2 = 9\n");
    CHECK_THROWS_AS(OracleTable::parse(bad), std::invalid_argument);
}
