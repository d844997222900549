#ifndef CURVEBOUND_CURVES_HPP
#define CURVEBOUND_CURVES_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "curvebound/exactalg.hpp"
#include "curvebound/gfarith.hpp"

namespace curvebound {

enum class CurveKind { HyperellipticForm, FiberProduct };

/// A smooth projective curve given by y^2 = f(x), or by the fiber product
/// {y^2 = f(x), z^2 = g(x)}, over a prime field. Coefficients are stored
/// reduced into [0, p).
struct CurveSpec {
    CurveKind kind = CurveKind::HyperellipticForm;
    unsigned p = 0;
    IntPolynomial f;
    IntPolynomial g;  // zero for HyperellipticForm
    char f_var = 'y';
    char g_var = 'z';

    /// floor((deg f - 1)/2), or the sum of the three subcover genera.
    int genus() const;
    std::string to_string() const;
};

class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// Grammar: `eq (';' eq)? 'over' 'GF(' int ')'`, `eq ::= var '^2' '=' poly(x)`.
/// Terms are products (`*`) of integers and powers of x; implicit
/// multiplication is rejected.
CurveSpec parse_curve(std::string_view text);

/// Validating constructors; throw std::invalid_argument when a right-hand
/// side is constant mod p or not square-free (f*g too, for fiber products).
CurveSpec make_hyperelliptic(const IntPolynomial& f, unsigned p, char var = 'y');
CurveSpec make_fiber_product(const IntPolynomial& f, const IntPolynomial& g, unsigned p);

/// The three quadratic subcovers y^2 = f, z^2 = g, w^2 = f*g.
std::array<CurveSpec, 3> quadratic_subcovers(const CurveSpec& spec);

struct PointCountVector {
    Integer q;
    std::vector<Integer> counts;  // counts[n-1] = N_n
};

/// N_n of y^2 = f(x) over F_{p^n}: sum over x of (1 + chi(f(x))) plus the
/// points at infinity (1 for odd deg f; 2 or 0 for even deg f according to
/// whether the leading coefficient is a square in F_{p^n}).
std::uint64_t hyperelliptic_count(const CurveSpec& spec, unsigned n);

/// Rational points at infinity of the smooth model over F_{p^n}.
unsigned points_at_infinity(const CurveSpec& spec, unsigned n);

struct FiberCounts {
    PointCountVector counts;
    int genus = 0;
    std::array<int, 3> subcover_genera{};
};

/// N_n(C) = N_n(y^2=f) + N_n(z^2=g) + N_n(w^2=fg) - 2(q^n + 1), n = 1..depth.
FiberCounts fiber_point_counts(const CurveSpec& spec, unsigned depth);

/// N_1..N_depth for either curve shape.
PointCountVector point_counts(const CurveSpec& spec, unsigned depth);

/// Brute-force number of affine (x, y, z) in F_{p^n}^3 on a fiber product.
std::uint64_t affine_system_count(const CurveSpec& spec, unsigned n);

enum class EllipticFamily { J0, Short };

struct EllipticEntry {
    CurveSpec curve;
    unsigned a = 0;  // x coefficient (0 for the j = 0 family)
    unsigned b = 0;
    std::uint64_t points = 0;
};

/// J0: y^2 = x^3 + b, b != 0. Short: y^2 = x^3 + a x + b with 4a^3 + 27b^2 != 0.
std::vector<EllipticEntry> enumerate_elliptic(unsigned q, EllipticFamily family);

/// Groups short Weierstrass curves into isomorphism classes over F_q,
/// (a, b) ~ (u^4 a, u^6 b). Each class is sorted by (a, b).
std::vector<std::vector<EllipticEntry>> elliptic_isomorphism_classes(const std::vector<EllipticEntry>& entries, unsigned q);

}  // namespace curvebound

#endif
