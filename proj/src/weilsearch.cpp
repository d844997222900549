#include "curvebound/weilsearch.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace curvebound {

Integer SearchConstraints::bound(unsigned d) const {
    auto it = a_lower.find(d);
    if (it == a_lower.end() || it->second < 0) return 0;
    return it->second;
}

unsigned SearchConstraints::effective_depth() const {
    unsigned d = depth;
    if (!a_lower.empty()) d = std::max(d, a_lower.rbegin()->first);
    return d;
}

void SearchConstraints::check() const {
    if (q < 2 || q > 32) throw std::invalid_argument("search requires 2 <= q <= 32");
    if (g < 1 || g > 10) throw std::invalid_argument("search requires 1 <= g <= 10");
    for (const auto& [d, v] : a_lower)
        if (d == 0) throw std::invalid_argument("a_d bounds are indexed from d = 1");
}

std::size_t FactorTable::size() const {
    std::size_t n = 0;
    for (const auto& v : by_degree) n += v.size();
    return n;
}

bool FactorTable::contains(const IntPolynomial& f) const {
    if (f.degree() < 1 || static_cast<std::size_t>(f.degree()) >= by_degree.size()) return false;
    const auto& v = by_degree[f.degree()];
    return std::binary_search(v.begin(), v.end(), f);
}

namespace {

long double two_sqrt(const Integer& q) { return 2.0L * std::sqrt(static_cast<long double>(q.get_d())); }

/// Monic degree-d integer polynomials in x whose roots all lie in [lo, hi]
/// (numerically, with outward slack). Coefficients are fixed from the top:
/// D_k = h^(d-k)/(d-k)! has degree k, D_k' is a positive multiple of D_{k-1},
/// and the new coefficient enters D_k as its constant term. Rolle forces
/// D_k to have k roots in [lo, hi], interlaced by those of D_{k-1}; the
/// admissible constant terms form an interval read off from the critical
/// values of D_k at the roots of D_{k-1}.
class InterlacingEnumerator {
   public:
    InterlacingEnumerator(int d, long double lo, long double hi, std::function<void(const std::vector<long long>&)> emit)
        : d_(d), lo_(lo), hi_(hi), emit_(std::move(emit)), c_(d + 1, 0), binom_(d + 1, std::vector<long double>(d + 1, 0)) {
        for (int n = 0; n <= d; ++n) {
            binom_[n][0] = 1;
            for (int k = 1; k <= n; ++k) binom_[n][k] = binom_[n - 1][k - 1] + (k <= n - 1 ? binom_[n - 1][k] : 0);
        }
        c_[d] = 1;
    }

    void run() { level(1, {}); }

   private:
    // D_k(x) without its constant term.
    long double eval_R(int k, long double x) const {
        const int m = d_ - k;
        long double acc = 0;
        for (int i = d_; i > m; --i) acc = acc * x + binom_[i][m] * static_cast<long double>(c_[i]);
        return acc * x;
    }

    long double eval_D(int k, long double x) const { return eval_R(k, x) + static_cast<long double>(c_[d_ - k]); }

    long double root_between(int k, long double a, long double b) const {
        long double fa = eval_D(k, a);
        long double fb = eval_D(k, b);
        if (fa == 0) return a;
        if (fb == 0) return b;
        if ((fa < 0) == (fb < 0)) return std::fabs(fa) < std::fabs(fb) ? a : b;
        for (int it = 0; it < 200 && b - a > 0; ++it) {
            long double m = a + (b - a) / 2;
            if (m <= a || m >= b) break;
            long double fm = eval_D(k, m);
            if (fm == 0) return m;
            if ((fm < 0) == (fa < 0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        return a + (b - a) / 2;
    }

    void level(int k, const std::vector<long double>& crit) {
        long double lower = -1e300L;
        long double upper = 1e300L;
        auto constrain = [&](long double x, int sign) {
            long double r = eval_R(k, x);
            long double slack = 1e-7L * (1 + std::fabs(r));
            if (sign > 0)
                lower = std::max(lower, -r - slack);
            else
                upper = std::min(upper, -r + slack);
        };
        constrain(hi_, 1);
        constrain(lo_, k % 2 == 0 ? 1 : -1);
        for (int j = 0; j + 1 < k; ++j) constrain(crit[j], (k - 1 - j) % 2 == 0 ? 1 : -1);
        if (lower > upper) return;
        const long long cmin = static_cast<long long>(std::ceil(lower));
        const long long cmax = static_cast<long long>(std::floor(upper));
        for (long long v = cmin; v <= cmax; ++v) {
            c_[d_ - k] = v;
            if (k == d_) {
                emit_(c_);
                continue;
            }
            std::vector<long double> roots;
            roots.reserve(k);
            long double a = lo_;
            for (int j = 0; j < k; ++j) {
                long double b = j + 1 < k ? crit[j] : hi_;
                roots.push_back(root_between(k, a, b));
                a = b;
            }
            level(k + 1, roots);
        }
        c_[d_ - k] = 0;
    }

    int d_;
    long double lo_;
    long double hi_;
    std::function<void(const std::vector<long long>&)> emit_;
    std::vector<long long> c_;
    std::vector<std::vector<long double>> binom_;
};

IntPolynomial to_poly(const std::vector<long long>& c) {
    std::vector<Integer> v;
    v.reserve(c.size());
    for (long long x : c) v.emplace_back(static_cast<long>(x));
    return IntPolynomial(std::move(v));
}

bool roots_in_interval(const IntPolynomial& h, const Integer& q) { return sturm_roots_in_symmetric_interval(h, q).all_real_in_interval; }

}  // namespace

FactorTable build_factor_table(const Integer& q, int g_max, std::size_t cap) {
    long double r = two_sqrt(q);
    return build_factor_table(q, g_max, -r, r, cap);
}

FactorTable build_factor_table(const Integer& q, int g_max, long double lo, long double hi, std::size_t cap) {
    if (q < 2 || q > 32) throw std::invalid_argument("factor tables need 2 <= q <= 32");
    if (g_max < 1 || g_max > 10) throw std::invalid_argument("factor tables need 1 <= degree <= 10");
    const long double r = two_sqrt(q);
    lo = std::max(lo, -r) - 1e-9L;
    hi = std::min(hi, r) + 1e-9L;
    FactorTable table;
    table.q = q;
    table.lo = lo;
    table.hi = hi;
    table.by_degree.resize(g_max + 1);
    if (lo > hi) return table;
    // Enumerate in x = t - s to keep coefficients small.
    const long long s = std::llround((lo + hi) / 2);
    std::size_t total = 0;
    for (int d = 1; d <= g_max; ++d) {
        auto& out = table.by_degree[d];
        InterlacingEnumerator en(d, lo - s, hi - s, [&](const std::vector<long long>& c) {
            IntPolynomial h = to_poly(c).taylor_shift(Integer(static_cast<long>(-s)));
            if (!roots_in_interval(h, q)) return;
            for (int e = 1; 2 * e <= d; ++e)
                for (const auto& f : table.by_degree[e])
                    if (divides(f, h)) return;
            out.push_back(std::move(h));
            if (++total > cap) {
                std::ostringstream os;
                os << "factor table exceeds " << cap << " entries while building degree " << d;
                throw std::length_error(os.str());
            }
        });
        en.run();
        std::sort(out.begin(), out.end());
    }
    return table;
}

IntPolynomial expand(const Factorization& f) {
    IntPolynomial h{1};
    for (const auto& [p, m] : f) h *= pow(p, static_cast<unsigned>(m));
    return h;
}

std::string format_factorization(const Factorization& f) {
    if (f.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, m] : f) {
        if (!first) os << '*';
        first = false;
        bool wrap = p.coeffs().size() > 1 && (p.degree() > 1 || p.coeff(0) != 0);
        std::string s = p.to_string('t');
        if (wrap) os << '(' << s << ')';
        else os << s;
        if (m != 1) os << '^' << m;
    }
    return os.str();
}

CandidateCheck verify_candidate(const SearchConstraints& c, const IntPolynomial& h) {
    c.check();
    CandidateCheck out;
    if (h.degree() != c.g || !h.is_monic()) {
        out.reason = "h is not monic of degree g";
        return out;
    }
    if (-h.coeff(c.g - 1) != c.trace_target()) {
        out.reason = "trace of h differs from q + 1 - N";
        return out;
    }
    if (!roots_in_interval(h, c.q)) {
        out.reason = "h has a root outside [-2 sqrt q, 2 sqrt q]";
        return out;
    }
    const unsigned depth = c.effective_depth();
    out.a = a_from_h(c.q, c.g, h, depth);
    for (unsigned d = 1; d <= depth; ++d) {
        if (out.a[d - 1] < c.bound(d)) {
            out.reason = "a_" + std::to_string(d) + " = " + out.a[d - 1].get_str() + " is below its bound " + c.bound(d).get_str();
            return out;
        }
    }
    out.admissible = true;
    return out;
}

namespace {

struct FactorInfo {
    IntPolynomial poly;
    int degree;
    Integer trace;
    Integer p2;
};

bool trace_feasible(const Integer& rest, int r, const Integer& q) { return rest * rest <= 4 * q * r * r; }

void sort_candidates(std::vector<WeilCandidate>& v) {
    std::sort(v.begin(), v.end(), [](const WeilCandidate& x, const WeilCandidate& y) { return x.h < y.h; });
}

void sort_excluded(std::vector<ExcludedCandidate>& v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.candidate.h < y.candidate.h; });
}

/// Factors of a monic h of degree <= 2 over Z: integer roots when the
/// discriminant is a square, otherwise h itself.
Factorization factor_small(const IntPolynomial& h) {
    if (h.degree() <= 1) return {{h, 1}};
    Integer disc = h.coeff(1) * h.coeff(1) - 4 * h.coeff(0);
    if (disc < 0 || !is_perfect_square(disc)) return {{h, 1}};
    Integer s = sqrt(disc);
    Integer r1 = (-h.coeff(1) - s) / 2;
    Integer r2 = (-h.coeff(1) + s) / 2;
    return canonical({{IntPolynomial::linear(r1), 1}, {IntPolynomial::linear(r2), 1}});
}

}  // namespace

SearchResult enumerate_real_weil(const SearchConstraints& c) {
    c.check();
    SearchResult result;
    const Integer T = c.trace_target();
    const int g = c.g;
    if (!trace_feasible(T, g, c.q)) return result;

    // p2 = sum mu_i^2 = q^2 + 1 + 2qg - N_2, and N_2 = N + 2 a_2.
    std::optional<Integer> P;
    if (c.effective_depth() >= 2) P = c.q * c.q + 1 + 2 * c.q * g - c.N - 2 * c.bound(2);
    const long double r = two_sqrt(c.q);
    long double lo = -r;
    long double hi = r;
    if (P) {
        Integer disc = (g - 1) * (g * *P - T * T);
        if (disc < 0) return result;
        long double center = static_cast<long double>(T.get_d()) / g;
        long double half = std::sqrt(static_cast<long double>(disc.get_d())) / g;
        lo = std::max(lo, center - half);
        hi = std::min(hi, center + half);
    }
    result.stats.window_lo = lo;
    result.stats.window_hi = hi;
    if (lo > hi + 1e-9L) return result;

    FactorTable table = build_factor_table(c.q, g, lo, hi);
    std::vector<FactorInfo> factors;
    result.stats.table_sizes.assign(g + 1, 0);
    for (int d = 1; d <= g; ++d) {
        result.stats.table_sizes[d] = table.by_degree[d].size();
        for (const auto& f : table.by_degree[d]) {
            Integer e1 = -f.coeff(d - 1);
            Integer e2 = d >= 2 ? f.coeff(d - 2) : Integer(0);
            factors.push_back({f, d, e1, e1 * e1 - 2 * e2});
        }
    }

    if (c.factor_order_seed != 0) {
        std::mt19937 rng(c.factor_order_seed);
        std::shuffle(factors.begin(), factors.end(), rng);
    }

    Factorization current;
    std::vector<WeilCandidate> found;
    std::function<void(std::size_t, int, const Integer&, const Integer&)> dfs = [&](std::size_t start, int deg, const Integer& tau, const Integer& pi) {
        ++result.stats.nodes;
        if (deg == g) {
            if (tau != T) return;
            IntPolynomial h = expand(current);
            CandidateCheck check = verify_candidate(c, h);
            if (!check.admissible) return;
            WeilCandidate w{std::move(h), canonical(current), std::move(check.a)};
            if (c.serre_filter) {
                ExclusionVerdict v = serre_test(w.h, w.factors);
                if (v.status == ExclusionStatus::Excluded) {
                    result.excluded.push_back({std::move(w), std::move(v)});
                    return;
                }
            }
            found.push_back(std::move(w));
            return;
        }
        for (std::size_t i = start; i < factors.size(); ++i) {
            const FactorInfo& f = factors[i];
            if (deg + f.degree > g) continue;
            const int rest = g - deg - f.degree;
            Integer tau2 = tau + f.trace;
            Integer pi2 = pi + f.p2;
            Integer remaining = T - tau2;
            if (rest == 0) {
                if (remaining != 0) continue;
                if (P && pi2 > *P) continue;
            } else {
                if (!trace_feasible(remaining, rest, c.q)) continue;
                if (P && rest * (*P - pi2) < remaining * remaining) continue;
            }
            if (!current.empty() && current.back().first == f.poly)
                ++current.back().second;
            else
                current.emplace_back(f.poly, 1);
            dfs(i, deg + f.degree, tau2, pi2);
            if (--current.back().second == 0) current.pop_back();
        }
    };
    dfs(0, 0, Integer(0), Integer(0));
    sort_candidates(found);
    result.candidates = std::move(found);
    sort_excluded(result.excluded);
    return result;
}

SearchResult brute_force_oracle_full(const SearchConstraints& c) {
    c.check();
    if (c.g > 2) throw std::invalid_argument("the brute-force oracle handles g <= 2 only");
    SearchResult out;
    auto keep = [&](const IntPolynomial& h) {
        CandidateCheck check = verify_candidate(c, h);
        if (!check.admissible) return;
        WeilCandidate w{h, factor_small(h), std::move(check.a)};
        if (c.serre_filter) {
            ExclusionVerdict v = serre_test(w.h, w.factors);
            if (v.status == ExclusionStatus::Excluded) {
                out.excluded.push_back({std::move(w), std::move(v)});
                return;
            }
        }
        out.candidates.push_back(std::move(w));
    };
    // |e_1| <= 2g sqrt q and |e_2| <= 4q.
    const long bound1 = static_cast<long>(std::floor(2.0L * c.g * std::sqrt(static_cast<long double>(c.q.get_d())))) + 1;
    const long q = c.q.get_si();
    for (long c1 = -bound1; c1 <= bound1; ++c1) {
        if (Integer(c1) * c1 > 4 * c.g * c.g * c.q) continue;
        if (c.g == 1) {
            keep(IntPolynomial{c1, 1});
            continue;
        }
        for (long c0 = -4 * q; c0 <= 4 * q; ++c0) keep(IntPolynomial{c0, c1, 1});
    }
    sort_candidates(out.candidates);
    sort_excluded(out.excluded);
    return out;
}

std::vector<WeilCandidate> brute_force_oracle(const SearchConstraints& c) { return brute_force_oracle_full(c).candidates; }

}  // namespace curvebound
