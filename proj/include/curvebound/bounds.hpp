#ifndef CURVEBOUND_BOUNDS_HPP
#define CURVEBOUND_BOUNDS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvebound/exactalg.hpp"

namespace curvebound {

/// c + d sqrt(q), exact. For square q the value is folded into c.
struct SqrtQValue {
    Rational c;
    Rational d;
    Integer q;

    int sign() const;
    /// Largest integer <= value.
    Integer floor() const;
    double approx() const;
    std::string to_string() const;

    friend SqrtQValue operator-(const SqrtQValue& x, const SqrtQValue& y);
};

/// P(x) = 1 + 2 sum u_n T_n(x), scaled to a primitive integer polynomial
/// (positive scalar), with its square-free decomposition.
struct NonnegativityWitness {
    IntPolynomial P;
    std::vector<std::pair<IntPolynomial, int>> factors;
    /// Roots in (-1, 1) of each factor, parallel to `factors`.
    std::vector<std::size_t> interior_roots;
    Rational sample_point;  // P(sample_point) > 0
};

struct BoundCertificate {
    Integer q;
    int g = 0;
    std::vector<Rational> u;  // u_1..u_D, nonnegative
    SqrtQValue bound;         // (g + sum u_n (q^(n/2) + q^(-n/2))) / sum u_n q^(-n/2)
    Integer floor;
    NonnegativityWitness witness;
};

/// Raised when f(theta) = 1 + 2 sum u_n cos(n theta) takes negative values.
class InfeasibleTrialFunction : public std::domain_error {
   public:
    InfeasibleTrialFunction(const std::string& what, IntPolynomial factor) : std::domain_error(what), factor_(std::move(factor)) {}
    const IntPolynomial& factor() const noexcept { return factor_; }

   private:
    IntPolynomial factor_;
};

/// Chebyshev polynomial of the first kind.
IntPolynomial chebyshev_T(unsigned n);

/// Exact certificate; throws InfeasibleTrialFunction or std::invalid_argument
/// (negative entry, all zero, q < 2, g < 0).
BoundCertificate bound_from_u(const Integer& q, int g, const std::vector<Rational>& u);

/// Recomputes P, the decomposition, the Sturm counts and the bound from
/// scratch and compares with the stored certificate.
bool verify_certificate(const BoundCertificate& cert);

struct OptimizerBudget {
    unsigned max_step_exponent = 12;  // steps 2^-1 .. 2^-k
    unsigned max_sweeps_per_step = 200;
    unsigned grid_bits = 24;  // final u has denominators dividing 2^grid_bits
};

/// Deterministic coordinate descent over u_1..u_D (D <= 8). Each probe is
/// scaled radially onto the boundary of the feasible region, which is convex
/// and contains 0; the search itself runs in floating point, and the result
/// is shrunk onto the dyadic grid and certified exactly. Never worse than
/// the exact certificates of the Weil seed u = [1/2] and the Fejer seed.
BoundCertificate optimize_u(const Integer& q, int g, unsigned D, const OptimizerBudget& budget = {});

/// floor(q + 1 + (sqrt((8q+1) g^2 + 4 (q^2 - q) g) - g) / 2).
Integer ihara_bound(const Integer& q, int g);

struct MinGenusResult {
    int genus = 0;  // least g whose certified floor reaches N
    std::vector<BoundCertificate> excluded;  // certificates for g = 1..genus-1
    BoundCertificate attained;  // certificate at `genus`
};

/// Least g in [1, g_cap] with floor(optimize_u(q, g, D)) >= N. Throws
/// std::invalid_argument if N <= q + 1 and std::range_error if the cap is
/// reached.
MinGenusResult min_genus(const Integer& q, const Integer& N, unsigned D = 6, int g_cap = 50);

}  // namespace curvebound

#endif
