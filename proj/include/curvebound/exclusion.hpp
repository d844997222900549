#ifndef CURVEBOUND_EXCLUSION_HPP
#define CURVEBOUND_EXCLUSION_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvebound/exactalg.hpp"

namespace curvebound {

using Factorization = std::vector<std::pair<IntPolynomial, int>>;

enum class ExclusionStatus { Excluded, EllipticMap, NoConclusion };

const char* to_string(ExclusionStatus s);

struct ExclusionVerdict {
    ExclusionStatus status = ExclusionStatus::NoConclusion;
    // Excluded: h = h1 * h2 with Res(h1, h2) = resultant in {-1, 1}.
    IntPolynomial h1;
    IntPolynomial h2;
    Integer resultant;
    // EllipticMap (and the computed value for NoConclusion): r = Res(t - mu, rad(h / (t - mu))).
    Integer mu;
    Integer r;
    std::string notes;
};

/// Tries every split of the distinct factors into two nonempty groups,
/// multiplicities staying with their factor, in canonical order (factors
/// sorted; the largest factor always on the second side). Throws
/// std::invalid_argument when the factors do not multiply to h.
ExclusionVerdict serre_test(const IntPolynomial& h, const Factorization& factors);

/// Requires (t - mu) | h with h / (t - mu) not vanishing at mu; throws
/// std::invalid_argument otherwise.
ExclusionVerdict howe_lauter_test(const IntPolynomial& h, const Integer& mu);

/// Canonical form: factors sorted, equal factors merged.
Factorization canonical(Factorization f);

/// Parses products such as "(t+2)(t+5)^3", "(t + 3)^3*(t + 4)^7" or
/// "t*(t^2-7)". Each parenthesized group is one factor.
Factorization parse_factored(std::string_view text);

}  // namespace curvebound

#endif
