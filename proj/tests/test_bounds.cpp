#include "doctest.h"

#include <cmath>

#include "curvebound/bounds.hpp"

using namespace curvebound;

namespace {

double sampled_min(const std::vector<Rational>& u) {
    double m = 1e300;
    for (int i = 0; i <= 20000; ++i) {
        double th = M_PI * i / 20000;
        double f = 1;
        for (std::size_t n = 0; n < u.size(); ++n) f += 2 * u[n].get_d() * std::cos((n + 1) * th);
        m = std::min(m, f);
    }
    return m;
}

double naive_bound(double q, int g, const std::vector<Rational>& u) {
    double num = g, den = 0;
    for (std::size_t n = 0; n < u.size(); ++n) {
        double p = std::pow(q, (n + 1) / 2.0);
        num += u[n].get_d() * (p + 1 / p);
        den += u[n].get_d() / p;
    }
    return num / den;
}

}  // namespace

TEST_CASE("chebyshev polynomials") {
    CHECK(chebyshev_T(0) == IntPolynomial{1});
    CHECK(chebyshev_T(2) == IntPolynomial{-1, 0, 2});
    CHECK(chebyshev_T(3) == IntPolynomial{0, -3, 0, 4});
    for (unsigned n = 0; n < 9; ++n)
        for (double x : {-0.9, -0.3, 0.2, 0.7}) CHECK(chebyshev_T(n).eval(Rational(x)).get_d() == doctest::Approx(std::cos(n * std::acos(x))));
}

TEST_CASE("weil seed reproduces the weil bound") {
    for (long q : {2, 4, 7, 9, 25})
        for (int g : {0, 1, 4, 10}) {
            auto c = bound_from_u(q, g, {Rational(1, 2)});
            double w = q + 1 + 2 * g * std::sqrt(double(q));
            CHECK(c.bound.approx() == doctest::Approx(w));
            Integer fl;
            mpz_set_d(fl.get_mpz_t(), std::floor(w + 1e-12));
            CHECK(c.floor == fl);
            CHECK(verify_certificate(c));
        }
    auto c = bound_from_u(7, 4, {Rational(1, 2)});
    CHECK(c.bound.to_string() == "8 + 8*sqrt(7)");
}

TEST_CASE("infeasible trial functions") {
    try {
        bound_from_u(7, 4, {Rational(1)});
        FAIL("expected infeasible");
    } catch (const InfeasibleTrialFunction& e) {
        CHECK(e.factor() == IntPolynomial{1, 2});
    }
    CHECK_THROWS_AS(bound_from_u(7, 4, {Rational(1, 2), Rational(1, 2)}), InfeasibleTrialFunction);
    CHECK_THROWS_AS(bound_from_u(7, 4, {Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(bound_from_u(7, 4, {Rational(-1, 4)}), std::invalid_argument);
    // Fejer kernel touches zero but stays feasible.
    auto f = bound_from_u(7, 4, {Rational(2, 3), Rational(1, 3)});
    CHECK(verify_certificate(f));
}

TEST_CASE("optimised certificates") {
    struct Row {
        int g;
        long max_floor;
    };
    for (Row r : {Row{4, 25}, Row{7, 47}, Row{9, 44}, Row{10, 47}}) {
        auto c = optimize_u(7, r.g, 6);
        CHECK(c.floor <= r.max_floor);
        CHECK(verify_certificate(c));
        CHECK(sampled_min(c.u) > -1e-9);
        CHECK(c.bound.approx() == doctest::Approx(naive_bound(7, r.g, c.u)));
        CHECK(c.floor <= ihara_bound(7, r.g) + 0);
    }
    CHECK(optimize_u(7, 4, 2).floor == 25);
    // Deterministic.
    auto a = optimize_u(7, 9, 4), b = optimize_u(7, 9, 4);
    CHECK(a.u == b.u);
    // Tampering breaks verification.
    auto t = optimize_u(7, 4, 3);
    t.floor -= 1;
    CHECK_FALSE(verify_certificate(t));
}

TEST_CASE("ihara bound") {
    for (long q : {2, 3, 7, 16})
        for (int g = 0; g < 30; ++g) {
            double v = q + 1 + (std::sqrt((8.0 * q + 1) * g * g + 4.0 * (q * q - q) * g) - g) / 2;
            CHECK(ihara_bound(q, g).get_d() == std::floor(v + 1e-9));
        }
    CHECK(ihara_bound(7, 4) == 25);
}

TEST_CASE("minimal genus") {
    CHECK(min_genus(7, 48).genus == 11);
    auto r = min_genus(7, 45);
    CHECK(r.genus == 10);
    CHECK(r.excluded.size() == 9);
    for (const auto& c : r.excluded) CHECK(c.floor < 45);
    CHECK(min_genus(7, 13).genus == 1);
    CHECK_THROWS_AS(min_genus(7, 8), std::invalid_argument);
    CHECK_THROWS_AS(min_genus(7, 100, 4, 3), std::range_error);
}
