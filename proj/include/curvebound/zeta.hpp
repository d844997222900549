#ifndef CURVEBOUND_ZETA_HPP
#define CURVEBOUND_ZETA_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvebound/exactalg.hpp"

namespace curvebound {

inline constexpr unsigned kDefaultZetaDepth = 10;

/// Zeta data of a genus-g curve over F_q in four equivalent forms.
struct WeilData {
    Integer q;
    int g = 0;
    IntPolynomial L;  // degree 2g, L(0) = 1
    IntPolynomial h;  // monic degree g, L(t) = t^g h(qt + 1/t)
    std::vector<Integer> N;
    std::vector<Integer> a;
};

/// Raised by h_from_L when L(t) is not of the form t^g h(qt + 1/t).
/// `index` is the first coefficient i <= g with b_{2g-i} != q^(g-i) b_i, or
/// -1 when symmetry holds but another normalization fails.
class SymmetryError : public std::domain_error {
   public:
    SymmetryError(const std::string& what, int index) : std::domain_error(what), index_(index) {}
    int index() const noexcept { return index_; }

   private:
    int index_;
};

/// Uses N_1..N_g (extra entries are ignored); throws std::domain_error if
/// a coefficient is not integral and std::invalid_argument if N is short.
IntPolynomial L_from_counts(const Integer& q, int g, std::span<const Integer> N);

IntPolynomial L_from_h(const Integer& q, int g, const IntPolynomial& h);
IntPolynomial h_from_L(const Integer& q, int g, const IntPolynomial& L);

/// N_1..N_depth from the coefficients of L, via n b_n = sum_{k<=n} c_k b_{n-k}
/// with c_k = N_k - q^k - 1.
std::vector<Integer> N_from_L(const Integer& q, int g, const IntPolynomial& L, unsigned depth);

/// N_1..N_depth from h: power sums of the roots of h (Newton), mapped to
/// sum(alpha^n + conj(alpha)^n) by W_n = mu W_{n-1} - q W_{n-2}.
std::vector<Integer> N_from_h(const Integer& q, int g, const IntPolynomial& h, unsigned depth);

/// Place counts a_1..a_depth; entries may be negative for non-curve inputs.
std::vector<Integer> a_from_h(const Integer& q, int g, const IntPolynomial& h, unsigned depth = kDefaultZetaDepth);

WeilData weil_data_from_h(const Integer& q, int g, const IntPolynomial& h, unsigned depth = kDefaultZetaDepth);
WeilData weil_data_from_counts(const Integer& q, int g, std::span<const Integer> N, unsigned depth = kDefaultZetaDepth);

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Every WeilData invariant, one entry each.
std::vector<ValidationCheck> validate(const WeilData& wd);
bool all_passed(const std::vector<ValidationCheck>& checks);

/// "[24, 3, 120, 558, ...]": the first min(|a|, 4) entries.
std::string format_prefix(std::span<const Integer> a, std::size_t shown = 4);

}  // namespace curvebound

#endif
