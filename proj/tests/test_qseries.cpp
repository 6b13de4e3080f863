#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qseries.hpp"

#include <random>

using namespace lgcy;

namespace {

NovikovSeries mono(const Rational& e, const Rational& c, const Rational& cut) {
    return NovikovSeries::monomial(e, c, cut);
}

NovikovSeries random_series(std::mt19937& rng, const Rational& cut) {
    std::uniform_int_distribution<int> nterms(1, 8), expn(0, 30), expd(1, 4), coef(-5, 5);
    NovikovSeries s(cut);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Rational c(coef(rng));
        if (c == 0) c = 1;
        s.add_term(Rational(expn(rng), expd(rng)), c);
    }
    return s;
}

} // namespace

TEST_CASE("parse_rational handles integers, fractions and exact decimals") {
    CHECK(*parse_rational("200") == Rational(200));
    CHECK(*parse_rational("0.5") == Rational(1, 2));
    CHECK(*parse_rational("-3/4") == Rational(-3, 4));
    CHECK(*parse_rational("1.25") == Rational(5, 4));
    CHECK(!parse_rational("a").has_value());
    CHECK(!parse_rational("1/0").has_value());
}

TEST_CASE("addition cancels and respects identities") {
    Rational cut = 100;
    NovikovSeries a = mono(1, 1, cut) + mono(4, 1, cut);
    NovikovSeries b = mono(1, -1, cut);
    NovikovSeries s = a + b;
    CHECK(s.terms().size() == 1);
    CHECK(s.coeff(4) == 1);
    CHECK((a + NovikovSeries::zero(cut)) == a);
}

TEST_CASE("multiplication adds exponents exactly") {
    Rational cut = 100;
    NovikovSeries p = mono(1, 1, cut) * mono(Rational(1, 4), 1, cut);
    CHECK(p.coeff(Rational(5, 4)) == 1);
    NovikovSeries a = mono(3, 7, cut) + mono(Rational(1, 2), -2, cut);
    CHECK((a * NovikovSeries::one(cut)) == a.truncated((a * NovikovSeries::one(cut)).cutoff()));
}

TEST_CASE("theta-square oracle: (sum_m T^{m^2/2})^2 leading terms") {
    // Brute-force double sum over |m| <= 20 freezes the expected coefficients.
    Rational cut = 10;
    NovikovSeries t(cut);
    for (int m = -20; m <= 20; ++m) t.add_term(Rational(m * m, 2), 1);
    NovikovSeries sq = t * t;
    std::map<Rational, Rational> expect;
    for (int m = -20; m <= 20; ++m)
        for (int n = -20; n <= 20; ++n) {
            Rational e = Rational(m * m + n * n, 2);
            if (e < sq.cutoff()) expect[e] += 1;
        }
    for (const auto& [e, c] : expect)
        CHECK(sq.coeff(e) == c);
    CHECK(sq.coeff(0) == 1);
    CHECK(sq.coeff(Rational(1, 2)) == 4);
    CHECK(sq.coeff(1) == 4);
}

TEST_CASE("inversion: monomials and geometric series") {
    Rational cut = 100;
    CHECK(NovikovSeries::one(cut).inverse().is_one());
    NovikovSeries tinv = mono(1, 1, cut).inverse();
    CHECK(tinv.coeff(-1) == 1);
    CHECK(tinv.terms().size() == 1);

    NovikovSeries a = mono(1, 1, cut) + mono(25, -1, cut);
    NovikovSeries r = a.inverse();
    CHECK(r.valuation() == -1);
    CHECK(r.coeff(-1) == 1);
    CHECK(r.coeff(23) == 1);
    CHECK(r.coeff(47) == 1);
    NovikovSeries prod = a * r;
    CHECK(series_agree_below(prod, NovikovSeries::one(prod.cutoff()), prod.cutoff()));
}

TEST_CASE("valuation basics") {
    Rational cut = 200;
    NovikovSeries s = mono(9, 1, cut) + mono(81, -3, cut);
    CHECK(s.valuation() == 9);
    CHECK((NovikovSeries::one(cut) + mono(1, 1, cut)).valuation() == 0);
    CHECK_THROWS_AS(NovikovSeries::zero(cut).valuation(), std::domain_error);
    CHECK_THROWS_AS(NovikovSeries::zero(cut).inverse(), std::domain_error);
}

TEST_CASE("ring axioms on random small series") {
    std::mt19937 rng(20240817);
    Rational cut = 40;
    for (int trial = 0; trial < 50; ++trial) {
        NovikovSeries a = random_series(rng, cut), b = random_series(rng, cut),
                      c = random_series(rng, cut);
        NovikovSeries lhs = (a * b) * c, rhs = a * (b * c);
        Rational bound = std::min(lhs.cutoff(), rhs.cutoff());
        CHECK(series_agree_below(lhs, rhs, bound));
        NovikovSeries dl = a * (b + c), dr = a * b + a * c;
        CHECK(series_agree_below(dl, dr, std::min(dl.cutoff(), dr.cutoff())));
        CHECK(series_agree_below(a + b, b + a, cut));
    }
}

TEST_CASE("inverse is a right inverse on random nonzero series") {
    std::mt19937 rng(7);
    Rational cut = 40;
    for (int trial = 0; trial < 100; ++trial) {
        NovikovSeries a = random_series(rng, cut);
        if (a.is_zero()) continue;
        NovikovSeries p = a * a.inverse();
        CHECK(series_agree_below(p, NovikovSeries::one(p.cutoff()), p.cutoff()));
    }
}

TEST_CASE("truncation is monotone under products") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        NovikovSeries big_a = random_series(rng, 80), big_b = random_series(rng, 80);
        NovikovSeries big = big_a * big_b;
        NovikovSeries small = big_a.truncated(30) * big_b.truncated(30);
        CHECK(series_agree_below(big, small, small.cutoff()));
    }
}

TEST_CASE("json rendering is sorted and exact") {
    NovikovSeries s(10);
    s.add_term(Rational(1, 4), Rational(-2, 3));
    s.add_term(2, 5);
    CHECK(series_to_json(s) == "[[1,4,-2,3],[2,1,5,1]]");
}
