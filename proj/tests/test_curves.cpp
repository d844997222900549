#include "doctest.h"

#include <cmath>

#include "curvebound/curves.hpp"

using namespace curvebound;

namespace {

const char* kCurveC = "y^2 = x^3 + 3; z^2 = -x^3 + 3 over GF(7)";

// Pairs (x, y) with y^2 = f(x), by direct scan, plus the infinity rule
// recomputed from the leading coefficient's character in F_{p^n}.
std::uint64_t brute_hyperelliptic(const CurveSpec& s, unsigned n) {
    auto F = field(s.p, n);
    std::uint64_t count = 0;
    for (const auto& x : F.elements()) {
        FieldElement fx = F.eval(s.f, x);
        for (const auto& y : F.elements()) count += F.mul(y, y) == fx;
    }
    if (s.f.degree() % 2 == 1) return count + 1;
    return count + (F.quadratic_character(F.from_integer(s.f.leading())) == 1 ? 2 : 0);
}

}  // namespace

TEST_CASE("parse_curve accepts the two supported shapes") {
    auto e = parse_curve("y^2 = x^3 + 3 over GF(7)");
    CHECK(e.kind == CurveKind::HyperellipticForm);
    CHECK(e.genus() == 1);
    CHECK(e.f == IntPolynomial{3, 0, 0, 1});

    auto c = parse_curve(kCurveC);
    CHECK(c.kind == CurveKind::FiberProduct);
    CHECK(c.g == IntPolynomial{3, 0, 0, 6});
    CHECK(c.genus() == 4);
    CHECK(c.f_var == 'y');
    CHECK(c.g_var == 'z');

    auto w = parse_curve("w^2=-x^6+2 over GF(7)");
    CHECK(w.f == IntPolynomial{2, 0, 0, 0, 0, 0, 6});
    CHECK(w.genus() == 2);
    CHECK(parse_curve("y^2 = 2*x*x^2 - 3*x + 1 over GF(11)").f == IntPolynomial{1, 8, 0, 2});
}

TEST_CASE("parse_curve rejects bad input") {
    CHECK_THROWS_AS(parse_curve("y^2 = x^2 over GF(7)"), ParseError);
    CHECK_THROWS_AS(parse_curve("y^2 = 3x^3 + 1 over GF(7)"), ParseError);
    CHECK_THROWS_AS(parse_curve("y^2 = x^3 + 1 over GF(9)"), ParseError);
    CHECK_THROWS_AS(parse_curve("y^2 = x^3 + 1; y^2 = x^3 + 2 over GF(7)"), ParseError);
    CHECK_THROWS_AS(parse_curve("y^3 = x^3 + 1 over GF(7)"), ParseError);
    CHECK_THROWS_AS(parse_curve("y^2 = 7 over GF(7)"), ParseError);
    CHECK_THROWS_AS(parse_curve("y^2 = x^3 + 1 ; z^2 = x^3 + 1 over GF(7)"), ParseError);
    CHECK_THROWS_AS(parse_curve("y^2 = x^3 + u over GF(7)"), ParseError);
    try {
        parse_curve("y^2 = x^3 + 3 over GF(7) junk");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 25);
    }
}

TEST_CASE("hyperelliptic counts") {
    auto e = parse_curve("y^2 = x^3 + 3 over GF(7)");
    CHECK(hyperelliptic_count(e, 1) == 13);
    CHECK(hyperelliptic_count(e, 2) == 39);
    auto w = parse_curve("w^2 = -x^6 + 2 over GF(7)");
    CHECK(hyperelliptic_count(w, 1) == 14);
    CHECK(points_at_infinity(w, 1) == 0);
    CHECK(points_at_infinity(w, 2) == 2);
    // 19 places of degree 2: N_2 = N_1 + 2 * 19
    CHECK(hyperelliptic_count(w, 2) == 14 + 2 * 19);
    for (const char* s : {"y^2 = x^3 + 3 over GF(7)", "y^2 = -x^6 + 2 over GF(7)", "y^2 = x^5 + x + 1 over GF(5)", "y^2 = 2*x^4 + 1 over GF(3)"}) {
        auto spec = parse_curve(s);
        for (unsigned n = 1; n <= 3; ++n) CHECK(hyperelliptic_count(spec, n) == brute_hyperelliptic(spec, n));
    }
}

TEST_CASE("fiber product counts for the genus-4 curve") {
    auto c = parse_curve(kCurveC);
    auto fc = fiber_point_counts(c, 2);
    CHECK(fc.genus == 4);
    CHECK(fc.subcover_genera == std::array<int, 3>{1, 1, 2});
    REQUIRE(fc.counts.counts.size() == 2);
    CHECK(fc.counts.counts[0] == 24);
    CHECK(fc.counts.counts[1] == 30);
    for (unsigned n = 1; n <= 2; ++n) {
        auto affine = affine_system_count(c, n);
        CHECK(affine <= fc.counts.counts[n - 1]);
        CHECK(Integer(static_cast<unsigned long>(affine + points_at_infinity(c, n))) == fc.counts.counts[n - 1]);
    }
    CHECK(affine_system_count(c, 1) == 24);
    CHECK(points_at_infinity(c, 1) == 0);
}

TEST_CASE("fiber product validation") {
    CHECK_THROWS_AS(make_fiber_product(IntPolynomial{3, 0, 0, 1}, IntPolynomial{1}, 7), std::invalid_argument);
    CHECK_THROWS_AS(make_fiber_product(IntPolynomial{3, 0, 0, 1}, IntPolynomial{3, 0, 0, 1}, 7), std::invalid_argument);
    CurveSpec bad;
    bad.kind = CurveKind::FiberProduct;
    bad.p = 7;
    bad.f = IntPolynomial{3, 0, 0, 1};
    bad.g = IntPolynomial{1};
    CHECK_THROWS_AS(affine_system_count(bad, 1), std::invalid_argument);
}

TEST_CASE("infinite places of a fiber product with all-even degrees") {
    // y^2 = x^2 + 1, z^2 = x^2 + 3 over F_7: x = infinity splits in all three.
    auto s = make_fiber_product(IntPolynomial{1, 0, 1}, IntPolynomial{3, 0, 1}, 7);
    CHECK(points_at_infinity(s, 1) == 4);
    auto fc = fiber_point_counts(s, 2);
    for (unsigned n = 1; n <= 2; ++n)
        CHECK(Integer(static_cast<unsigned long>(affine_system_count(s, n) + points_at_infinity(s, n))) == fc.counts.counts[n - 1]);
    // 3 is a non-square mod 7: one split and two inert subcovers.
    auto t = make_fiber_product(IntPolynomial{1, 0, 1}, IntPolynomial{1, 0, 3}, 7);
    CHECK(points_at_infinity(t, 1) == 0);
    CHECK(points_at_infinity(t, 2) == 4);
    auto ft = fiber_point_counts(t, 2);
    for (unsigned n = 1; n <= 2; ++n)
        CHECK(Integer(static_cast<unsigned long>(affine_system_count(t, n) + points_at_infinity(t, n))) == ft.counts.counts[n - 1]);
}

TEST_CASE("elliptic families over F_7") {
    auto j0 = enumerate_elliptic(7, EllipticFamily::J0);
    CHECK(j0.size() == 6);
    int thirteen = 0;
    for (const auto& e : j0)
        if (e.points == 13) {
            ++thirteen;
            CHECK(e.b == 3);
        }
    CHECK(thirteen == 1);

    auto all = enumerate_elliptic(7, EllipticFamily::Short);
    std::uint64_t best = 0;
    bool found_14 = false;
    bool found_34 = false;
    const double lo = 8 - 2 * std::sqrt(7.0);
    const double hi = 8 + 2 * std::sqrt(7.0);
    for (const auto& e : all) {
        best = std::max(best, e.points);
        CHECK(static_cast<double>(e.points) >= lo);
        CHECK(static_cast<double>(e.points) <= hi);
        if (e.a == 1 && e.b == 4) found_14 = e.points == 10;
        if (e.a == 3 && e.b == 4) found_34 = e.points == 10;
    }
    CHECK(best == 13);
    CHECK(found_14);
    CHECK(found_34);

    std::vector<EllipticEntry> ten;
    for (const auto& e : all)
        if (e.points == 10) ten.push_back(e);
    auto classes = elliptic_isomorphism_classes(ten, 7);
    CHECK(classes.size() == 2);
}
