#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "curvebound/exactalg.hpp"
#include "curvebound/exclusion.hpp"
#include "curvebound/weilsearch.hpp"
#include "curvebound/zeta.hpp"

using namespace curvebound;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_deg, long range) {
    std::uniform_int_distribution<int> deg(1, max_deg);
    std::uniform_int_distribution<long> co(-range, range);
    int d = deg(rng);
    std::vector<Integer> c(d + 1);
    for (auto& x : c) x = co(rng);
    while (c.back() == 0) c.back() = co(rng);
    return IntPolynomial(c);
}

/// Sylvester determinant by Gaussian elimination over Q.
Integer sylvester_oracle(const IntPolynomial& f, const IntPolynomial& g) {
    int m = f.degree(), n = g.degree();
    int sz = m + n;
    std::vector<std::vector<Rational>> M(sz, std::vector<Rational>(sz, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) M[i][i + k] = f.coeff(m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) M[n + i][i + k] = g.coeff(n - k);
    Rational det = 1;
    for (int col = 0; col < sz; ++col) {
        int piv = -1;
        for (int r = col; r < sz; ++r)
            if (sgn(M[r][col]) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det *= M[col][col];
        for (int r = col + 1; r < sz; ++r) {
            if (sgn(M[r][col]) == 0) continue;
            Rational fct = M[r][col] / M[col][col];
            for (int k = col; k < sz; ++k) M[r][k] -= fct * M[col][k];
        }
    }
    return det.get_num();
}

}  // namespace

TEST_CASE("resultant: oracle, swap sign and multiplicativity on 1000 pairs") {
    std::mt19937 rng(20240601);
    for (int i = 0; i < 1000; ++i) {
        auto f = random_poly(rng, 5, 9);
        auto g = random_poly(rng, 5, 9);
        auto f2 = random_poly(rng, 3, 9);
        Integer r = resultant(f, g);
        CHECK(r == sylvester_oracle(f, g));
        Integer sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
        CHECK(resultant(g, f) == sign * r);
        CHECK(resultant(f * f2, g) == r * resultant(f2, g));
    }
}

TEST_CASE("sturm counts against known roots on 1000 polynomials") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 3), shift(1, 9), cnt(1, 5), qc(0, 2);
    for (int i = 0; i < 1000; ++i) {
        IntPolynomial p{1};
        std::vector<Rational> roots;
        for (long k = cnt(rng); k > 0; --k) {
            long a = num(rng), b = den(rng);
            roots.emplace_back(a, b);
            roots.back().canonicalize();
            p *= IntPolynomial{-a, b};
        }
        // t^2 + s has no real roots.
        for (long k = qc(rng); k > 0; --k) p *= IntPolynomial{shift(rng), 0, 1};
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        Rational lo(num(rng) * 2 - 1, 4), hi(num(rng) * 2 + 1, 4);
        lo.canonicalize();
        hi.canonicalize();
        if (hi < lo) std::swap(lo, hi);
        std::size_t expect = 0;
        for (const auto& r : roots)
            if (lo < r && r < hi) ++expect;
        CHECK(count_roots_open(p, lo, hi) == expect);
        CHECK(count_real_roots(p) == roots.size());
    }
}

TEST_CASE("sturm counts against a sign-change grid on 1000 polynomials") {
    std::mt19937 rng(5);
    int exact = 0;
    for (int i = 0; i < 1000; ++i) {
        auto r = radical(random_poly(rng, 6, 20));
        if (r.degree() < 1) continue;
        // Cauchy bound on the roots.
        Rational B = 0;
        for (int k = 0; k < r.degree(); ++k) B = std::max(B, Rational(abs(r.coeff(k)), abs(r.leading())));
        long lim = static_cast<long>(std::ceil(Rational(B + 1).get_d())) + 1;
        std::size_t seen = 0;
        int last = r.sign_at(Rational(-lim));
        for (long k = -256 * lim + 1; k <= 256 * lim; ++k) {
            int s = r.sign_at(Rational(k, 256));
            if (s == 0) {
                ++seen;
                last = 0;
            } else {
                if (last != 0 && s != last) ++seen;
                last = s;
            }
        }
        std::size_t count = count_real_roots(r);
        CHECK(seen <= count);
        CHECK((count - seen) % 2 == 0);
        if (seen == count) ++exact;
    }
    CHECK(exact >= 950);
}

TEST_CASE("quadratic value signs") {
    for (long d : {2, 3, 5, 6, 7, 8, 10, 11, 12, 13, 28})
        for (long a = -30; a <= 30; ++a)
            for (long b = -30; b <= 30; ++b) {
                long double v = a + b * std::sqrt(static_cast<long double>(d));
                int expect = v > 0 ? 1 : v < 0 ? -1 : 0;
                CHECK(QuadraticValue{a, b, d}.sign() == expect);
            }
}

TEST_CASE("zeta round trips on 500 random admissible h") {
    std::mt19937 rng(11);
    for (int i = 0; i < 500; ++i) {
        long q = std::vector<long>{2, 3, 4, 5, 7, 8, 9}[rng() % 7];
        long m = static_cast<long>(std::floor(2 * std::sqrt(double(q))));
        int g = 1 + static_cast<int>(rng() % 5);
        IntPolynomial h{1};
        for (int k = 0; k < g; ++k) h *= IntPolynomial{-(static_cast<long>(rng() % (2 * m + 1)) - m), 1};
        Integer qq = q;
        auto L = L_from_h(qq, g, h);
        CHECK(h_from_L(qq, g, L) == h);
        auto N = N_from_h(qq, g, h, 2 * g + 2);
        CHECK(N == N_from_L(qq, g, L, 2 * g + 2));
        CHECK(L_from_counts(qq, g, N) == L);
        auto wd = weil_data_from_h(qq, g, h);
        CHECK(wd.L == L);
        // a_d can be negative for an arbitrary h; only the divisor sums are checked.
        CHECK(N_from_a(wd.a) == std::vector<Integer>(wd.N.begin(), wd.N.begin() + wd.a.size()));
    }
}

TEST_CASE("weil search agrees with the brute-force oracle for g <= 2") {
    for (long q : {3, 5, 7})
        for (int g : {1, 2}) {
            long top = q + 1 + static_cast<long>(std::floor(2 * g * std::sqrt(double(q))));
            for (long N = 0; N <= top; ++N)
                for (bool serre : {false, true}) {
                    SearchConstraints c;
                    c.q = q;
                    c.g = g;
                    c.N = N;
                    c.serre_filter = serre;
                    auto fast = enumerate_real_weil(c);
                    auto slow = brute_force_oracle_full(c);
                    REQUIRE(fast.candidates.size() == slow.candidates.size());
                    for (std::size_t i = 0; i < fast.candidates.size(); ++i) {
                        CHECK(fast.candidates[i].h == slow.candidates[i].h);
                        CHECK(fast.candidates[i].a == slow.candidates[i].a);
                    }
                    CHECK(fast.excluded.size() == slow.excluded.size());
                }
        }
}

TEST_CASE("search output does not depend on the factor order") {
    SearchConstraints c;
    c.q = 7;
    c.g = 4;
    c.N = 24;
    c.serre_filter = false;
    auto base = enumerate_real_weil(c);
    for (unsigned seed : {1u, 2u, 3u, 99u}) {
        c.factor_order_seed = seed;
        auto r = enumerate_real_weil(c);
        REQUIRE(r.candidates.size() == base.candidates.size());
        for (std::size_t i = 0; i < r.candidates.size(); ++i) CHECK(r.candidates[i].h == base.candidates[i].h);
    }
}

TEST_CASE("windowed factor table matches a coefficient box for degrees <= 2") {
    for (long q : {3, 5, 7}) {
        auto t = build_factor_table(q, 2);
        long m = static_cast<long>(std::floor(2 * std::sqrt(double(q))));
        std::size_t lin = 0, quad = 0;
        for (long c = -m; c <= m; ++c) ++lin;
        for (long b = -2 * m; b <= 2 * m; ++b)
            for (long c0 = -4 * q; c0 <= 4 * q; ++c0) {
                // Irreducible over Q with both roots in [-2 sqrt q, 2 sqrt q].
                long disc = b * b - 4 * c0;
                if (disc <= 0 || is_perfect_square(Integer(disc))) continue;
                long double r1 = (-b - std::sqrt((long double)disc)) / 2, r2 = (-b + std::sqrt((long double)disc)) / 2;
                long double lim = 2 * std::sqrt((long double)q);
                if (r1 >= -lim && r2 <= lim) {
                    ++quad;
                    CHECK(t.contains(IntPolynomial{c0, b, 1}));
                }
            }
        CHECK(t.by_degree[1].size() == lin);
        CHECK(t.by_degree[2].size() == quad);
    }
}

TEST_CASE("serre criterion on pairs of integer roots") {
    for (long m = -5; m <= 5; ++m)
        for (long k = -5; k <= 5; ++k) {
            if (m == k) continue;
            IntPolynomial a{-m, 1}, b{-k, 1};
            auto v = serre_test(a * b, {{a, 1}, {b, 1}});
            CHECK((v.status == ExclusionStatus::Excluded) == (std::abs(m - k) == 1));
            CHECK(abs(resultant(a, b)) == std::abs(m - k));
        }
}
