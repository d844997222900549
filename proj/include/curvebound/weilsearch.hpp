#ifndef CURVEBOUND_WEILSEARCH_HPP
#define CURVEBOUND_WEILSEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvebound/exactalg.hpp"
#include "curvebound/exclusion.hpp"
#include "curvebound/zeta.hpp"

namespace curvebound {

struct SearchConstraints {
    Integer q;
    int g = 0;
    Integer N;
    /// d -> lower bound on a_d. Every d <= depth defaults to a_d >= 0; an
    /// explicit bound below zero is replaced by zero.
    std::map<unsigned, Integer> a_lower;
    unsigned depth = kDefaultZetaDepth;
    /// Also drop every h that splits as h1 * h2 with Res(h1, h2) = +-1.
    bool serre_filter = true;
    /// Nonzero: visit factor-table entries in a seeded random order. The
    /// output does not depend on it.
    unsigned factor_order_seed = 0;

    Integer trace_target() const { return q + 1 - N; }
    /// Effective bound max(a_lower[d], 0) for d = 1..effective_depth().
    Integer bound(unsigned d) const;
    unsigned effective_depth() const;
    /// Throws std::invalid_argument on q < 2, g < 1, or q > 32.
    void check() const;
};

/// Monic irreducible integer polynomials whose roots all lie in
/// [-2 sqrt q, 2 sqrt q] and in the numeric window [lo, hi], per degree.
struct FactorTable {
    Integer q;
    long double lo = 0;
    long double hi = 0;
    std::vector<std::vector<IntPolynomial>> by_degree;  // by_degree[d], d = 0 unused

    std::size_t size() const;
    bool contains(const IntPolynomial& f) const;
};

inline constexpr std::size_t kFactorTableCap = 200'000;

/// Full interval [-2 sqrt q, 2 sqrt q].
FactorTable build_factor_table(const Integer& q, int g_max, std::size_t cap = kFactorTableCap);
/// Restricted to roots in [lo, hi]; the window is widened slightly so that
/// rounding never drops an entry. Throws std::length_error past the cap,
/// naming the degree reached.
FactorTable build_factor_table(const Integer& q, int g_max, long double lo, long double hi, std::size_t cap = kFactorTableCap);

struct WeilCandidate {
    IntPolynomial h;
    Factorization factors;  // empty when produced by the brute-force oracle
    std::vector<Integer> a;  // a_1..a_depth
};

struct SearchStats {
    long double window_lo = 0;
    long double window_hi = 0;
    std::vector<std::size_t> table_sizes;  // per degree
    std::uint64_t nodes = 0;
};

struct ExcludedCandidate {
    WeilCandidate candidate;
    ExclusionVerdict verdict;
};

struct SearchResult {
    std::vector<WeilCandidate> candidates;  // canonical order of h
    std::vector<ExcludedCandidate> excluded;  // removed by the resultant filter
    SearchStats stats;
};

/// All monic degree-g h with roots in [-2 sqrt q, 2 sqrt q], a_1 = N and every
/// configured a_d bound. Multiset search over a factor table restricted to
/// the root window implied by the trace and the a_2 bound, pruned by
/// T_r^2 <= 4 q r^2 and r (P - p2) >= T_r^2 on the r unassigned roots.
SearchResult enumerate_real_weil(const SearchConstraints& c);

/// Same filters over the raw coefficient box; g <= 2 only.
SearchResult brute_force_oracle_full(const SearchConstraints& c);
std::vector<WeilCandidate> brute_force_oracle(const SearchConstraints& c);

struct CandidateCheck {
    bool admissible = false;
    std::string reason;  // first failing condition
    std::vector<Integer> a;
};

/// Forward verification of a single h against the constraints.
CandidateCheck verify_candidate(const SearchConstraints& c, const IntPolynomial& h);

IntPolynomial expand(const Factorization& f);

/// "(t + 3)^3*(t + 4)^7"
std::string format_factorization(const Factorization& f);

}  // namespace curvebound

#endif
