#ifndef CURVEBOUND_EXACTALG_HPP
#define CURVEBOUND_EXACTALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace curvebound {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of t^i; no trailing zeros are stored, so the
/// zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
   public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const Integer& c);
    static IntPolynomial monomial(const Integer& c, std::size_t k);
    /// t - root
    static IntPolynomial linear(const Integer& root);

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const noexcept { return c_; }
    /// Coefficient of t^i, zero past the degree.
    Integer coeff(std::size_t i) const;
    const Integer& leading() const;
    bool is_monic() const;
    bool is_constant() const noexcept { return c_.size() <= 1; }

    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;
    /// Sign of p(x) for rational x, without building the rational value.
    int sign_at(const Rational& x) const;

    IntPolynomial derivative() const;
    Integer content() const;
    /// p / content(p) with positive leading coefficient.
    IntPolynomial primitive_part() const;
    /// p(t + shift)
    IntPolynomial taylor_shift(const Integer& shift) const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    IntPolynomial& operator*=(const Integer& s);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
    /// Canonical order: by degree, then coefficients from the top down.
    friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

    std::string to_string(char var = 't') const;

   private:
    void trim();
    std::vector<Integer> c_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

IntPolynomial pow(const IntPolynomial& p, unsigned e);

struct PseudoDivision {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/// lc(b)^(deg a - deg b + 1) * a = quotient * b + remainder.
PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b in Z[t]; throws std::domain_error if b does not divide a.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);
bool divides(const IntPolynomial& b, const IntPolynomial& a);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Monic square-free part f / gcd(f, f').
IntPolynomial radical(const IntPolynomial& f);

/// Square-free decomposition: primitive pairwise-coprime factors with their
/// multiplicities, so that f = c * prod factor^multiplicity for some integer c.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& f);

/// Sylvester resultant, via fraction-free (Bareiss) elimination.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

/// a + b*sqrt(d), d a positive non-square.
struct QuadraticValue {
    Integer a;
    Integer b;
    Integer d;

    int sign() const;
};

/// p(b * sqrt(d)) as an exact QuadraticValue.
QuadraticValue eval_at_sqrt_multiple(const IntPolynomial& p, const Integer& b, const Integer& d);

bool is_perfect_square(const Integer& n);

/// Sturm chain with primitive-part normalisation; every member is a positive
/// multiple of the classical Sturm sequence element.
std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p);

/// Number of distinct real roots.
std::size_t count_real_roots(const IntPolynomial& p);

/// Number of distinct real roots in the open interval (lo, hi).
std::size_t count_roots_open(const IntPolynomial& p, const Rational& lo, const Rational& hi);

struct SymmetricIntervalRoots {
    std::size_t count = 0;
    bool all_real_in_interval = false;
};

/// Distinct real roots of h in [-2 sqrt q, 2 sqrt q], and whether every
/// complex root of h is real and lies there.
SymmetricIntervalRoots sturm_roots_in_symmetric_interval(const IntPolynomial& h, const Integer& q);

int mobius(unsigned n);

/// a_n = (1/n) sum_{d|n} mu(n/d) N_d. Throws std::domain_error on a
/// non-integral entry.
std::vector<Integer> mobius_a_from_N(std::span<const Integer> N);

/// N_n = sum_{d|n} d a_d.
std::vector<Integer> N_from_a(std::span<const Integer> a);

}  // namespace curvebound

#endif
