#include "curvebound/covers.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>
#include <stdexcept>

namespace curvebound {

int different_degree(int g_X, int g_E) {
    if (g_X < 0 || g_E < 0) throw std::invalid_argument("genera must be nonnegative");
    int d = 2 * g_X - 2 - 3 * (2 * g_E - 2);
    if (d < 0) throw std::invalid_argument("Hurwitz formula gives a negative different degree");
    return d;
}

namespace {

void check_tame(unsigned q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (q % 3 == 0) throw std::invalid_argument("characteristic 3 gives wild ramification in degree 3");
}

/// Multisets of integers >= 2 summing to n, each in non-decreasing order.
std::vector<std::vector<unsigned>> partitions_min2(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned min_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned k = min_part; k <= rest; ++k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(n, 2);
    return out;
}

/// Multisets of residual parts whose contributions sum to n; parts ordered
/// by (contribution, type).
std::vector<std::vector<ResidualPart>> residual_patterns(unsigned n) {
    std::vector<ResidualPart> kinds;
    for (unsigned v = 2; v <= n; ++v) {
        kinds.push_back({PartType::B, v});
        if (v % 2 == 0 && v / 2 >= 2) kinds.push_back({PartType::C, v / 2});
    }
    std::vector<std::vector<ResidualPart>> out;
    std::vector<ResidualPart> cur;
    std::function<void(unsigned, std::size_t)> rec = [&](unsigned rest, std::size_t start) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < kinds.size(); ++i) {
            unsigned v = kinds[i].different_contribution();
            if (v > rest) break;
            cur.push_back(kinds[i]);
            rec(rest - v, i);
            cur.pop_back();
        }
    };
    rec(n, 0);
    return out;
}

}  // namespace

std::vector<GaloisSplit> galois_split_feasible(unsigned N_X, unsigned N_E, int g_X, int g_E, unsigned q) {
    check_tame(q);
    const int degD = different_degree(g_X, g_E);
    std::vector<GaloisSplit> out;
    for (unsigned s = 0; 3 * s <= N_X; ++s) {
        unsigned r = N_X - 3 * s;
        if (s + r > N_E) continue;
        unsigned i = N_E - s - r;
        if (2 * static_cast<int>(r) > degD) continue;
        unsigned residual = degD - 2 * r;
        if (residual % 2 != 0) continue;
        auto places = partitions_min2(residual / 2);
        if (places.empty()) continue;
        out.push_back({s, r, i, residual, std::move(places)});
    }
    return out;
}

std::set<int> CoveringCase::genus_set() const {
    std::set<int> g;
    for (const auto& p : patterns)
        if (!p.excluded) g.insert(p.g_bar);
    return g;
}

std::vector<CoveringCase> nongalois_profiles(unsigned N_X, unsigned N_E, int g_X, int g_E, std::optional<unsigned> a2_X, unsigned q) {
    check_tame(q);
    if (q % 3 != 1) throw std::invalid_argument("the C-point rule needs q = 1 mod 3");
    const int degD = different_degree(g_X, g_E);
    std::vector<CoveringCase> out;
    for (unsigned a = 0; 3 * a <= N_X; ++a)
        for (unsigned b = 0; 3 * a + 2 * b <= N_X; ++b)
            for (unsigned bp = 0; 3 * a + 2 * b + bp <= N_X; ++bp) {
                unsigned c = N_X - 3 * a - 2 * b - bp;
                if (a + b + bp + c > N_E) continue;
                unsigned cp = N_E - a - b - bp - c;
                if (static_cast<int>(b + 2 * c) > degD) continue;
                unsigned delta = degD - (b + 2 * c);
                auto pats = residual_patterns(delta);
                if (pats.empty()) continue;

                CoveringCase cc;
                cc.profile = {a, b, bp, c, cp};
                cc.N_bar = 6 * a + 3 * b + 2 * c;
                for (auto& parts : pats) {
                    ResidualPattern rp;
                    unsigned b_total = b;
                    unsigned c_total = c;
                    rp.degree2_places = bp;
                    for (const auto& part : parts) {
                        if (part.type == PartType::B) {
                            b_total += part.degree;
                            if (part.degree == 2) rp.degree2_places += 2;
                        } else {
                            c_total += part.degree;
                            if (part.degree == 2) rp.degree2_places += 1;
                        }
                    }
                    rp.parts = std::move(parts);
                    rp.deg_Dbar = 3 * b_total + 4 * c_total;
                    rp.g_bar = (6 * (2 * g_E - 2) + static_cast<int>(rp.deg_Dbar)) / 2 + 1;
                    if (a2_X && rp.degree2_places > *a2_X) {
                        rp.excluded = true;
                        rp.reason = "forces " + std::to_string(rp.degree2_places) + " places of degree 2 but a_2(X) = " + std::to_string(*a2_X);
                    }
                    cc.patterns.push_back(std::move(rp));
                }
                bool any = std::any_of(cc.patterns.begin(), cc.patterns.end(), [](const auto& p) { return !p.excluded; });
                if (!any) {
                    cc.excluded = true;
                    cc.reason = a2_X && bp > *a2_X ? "b' = " + std::to_string(bp) + " forces more than a_2(X) = " + std::to_string(*a2_X) + " places of degree 2"
                                                   : "every residual pattern violates the a_2 bound";
                }
                out.push_back(std::move(cc));
            }
    std::sort(out.begin(), out.end(), [](const CoveringCase& x, const CoveringCase& y) {
        const auto& p = x.profile;
        const auto& r = y.profile;
        return std::tuple(r.a, r.cp, r.bp, r.b, r.c) < std::tuple(p.a, p.cp, p.bp, p.b, p.c);
    });
    unsigned n = 0;
    for (auto& cc : out)
        if (!cc.excluded) cc.label = roman(++n);
    return out;
}

std::string to_string(const SplittingProfile& p) {
    std::ostringstream os;
    os << '(' << p.a << ',' << p.b << ',' << p.bp << ',' << p.c << ',' << p.cp << ')';
    return os.str();
}

std::string to_string(const ResidualPart& p) { return (p.type == PartType::B ? "B" : "C") + std::to_string(p.degree); }

std::string to_string(const std::vector<ResidualPart>& parts) {
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + to_string(parts[i]);
    return s + "}";
}

std::string roman(unsigned n) {
    if (n == 0 || n >= 40) throw std::invalid_argument("roman numerals 1..39 only");
    static const char* tens[] = {"", "X", "XX", "XXX"};
    static const char* ones[] = {"", "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
    return std::string(tens[n / 10]) + ones[n % 10];
}

}  // namespace curvebound
