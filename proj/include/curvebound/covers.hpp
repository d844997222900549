#ifndef CURVEBOUND_COVERS_HPP
#define CURVEBOUND_COVERS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace curvebound {

/// Galois degree-3 covering X -> E: s rational places split completely,
/// r totally ramify, i are inert. Ramification at higher-degree places is
/// listed as the degrees of totally ramified places (each contributes 2 deg
/// to the different).
struct GaloisSplit {
    unsigned s = 0;
    unsigned r = 0;
    unsigned i = 0;
    unsigned residual = 0;  // deg D - 2r
    std::vector<std::vector<unsigned>> residual_places;  // degree multisets, parts >= 2
};

/// deg D = 2 g_X - 2 - 3 (2 g_E - 2); throws std::invalid_argument if negative.
int different_degree(int g_X, int g_E);

std::vector<GaloisSplit> galois_split_feasible(unsigned N_X, unsigned N_E, int g_X, int g_E, unsigned q = 7);

/// Counts of A-, B-, B'-, C-, C'-points among the rational places of E.
struct SplittingProfile {
    unsigned a = 0;
    unsigned b = 0;
    unsigned bp = 0;
    unsigned c = 0;
    unsigned cp = 0;

    friend bool operator==(const SplittingProfile&, const SplittingProfile&) = default;
};

enum class PartType { B, C };

/// Ramified place of E of degree >= 2: B-type (one ramified and one
/// unramified place above it in X) or C-type (totally ramified).
struct ResidualPart {
    PartType type = PartType::B;
    unsigned degree = 2;

    unsigned different_contribution() const { return type == PartType::B ? degree : 2 * degree; }
    friend bool operator==(const ResidualPart&, const ResidualPart&) = default;
};

struct ResidualPattern {
    std::vector<ResidualPart> parts;
    unsigned deg_Dbar = 0;
    int g_bar = 0;
    unsigned degree2_places = 0;  // degree-2 places of X forced by b' and the parts
    bool excluded = false;
    std::string reason;
};

struct CoveringCase {
    SplittingProfile profile;
    unsigned N_bar = 0;  // 6a + 3b + 2c
    std::vector<ResidualPattern> patterns;  // all patterns, excluded ones marked
    bool excluded = false;
    std::string reason;
    std::string label;  // I, II, ... for surviving cases

    std::set<int> genus_set() const;  // surviving patterns only
};

/// Non-Galois degree-3 coverings X -> E with S_3 closure. Enumerates every
/// profile with 3a + 2b + b' + c = N_X, a + b + b' + c + c' = N_E,
/// b + 2c <= deg D and residual deg D - (b + 2c) a sum of B_k (value k) and
/// C_k (value 2k) parts, k >= 2; then every residual pattern. The a2 filter
/// (if given) drops patterns whose forced degree-2 places exceed a2_X.
/// Requires q = 1 mod 3 and 3 not dividing q; throws std::invalid_argument
/// otherwise.
std::vector<CoveringCase> nongalois_profiles(unsigned N_X, unsigned N_E, int g_X, int g_E, std::optional<unsigned> a2_X, unsigned q = 7);

std::string to_string(const SplittingProfile& p);
std::string to_string(const ResidualPart& p);
std::string to_string(const std::vector<ResidualPart>& parts);

/// Roman numeral 1..39.
std::string roman(unsigned n);

}  // namespace curvebound

#endif
