#include "curvebound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace curvebound {

namespace {

Integer common_denominator(const std::vector<Rational>& xs) {
    Integer l = 1;
    for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer ipow(const Integer& b, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

/// Exact sign of c + d sqrt(q) for q a non-square.
int sign_nonsquare(const Rational& c, const Rational& d, const Integer& q) {
    Integer l = common_denominator({c, d});
    Rational cs = c * l, ds = d * l;
    return QuadraticValue{cs.get_num(), ds.get_num(), q}.sign();
}

void check_args(const Integer& q, int g) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
}

void check_u(const std::vector<Rational>& u) {
    bool any = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (sgn(u[i]) < 0) throw std::invalid_argument("u_" + std::to_string(i + 1) + " is negative");
        any = any || sgn(u[i]) > 0;
    }
    if (!any) throw std::invalid_argument("u must have a positive entry");
}

/// Primitive integer multiple of 1 + 2 sum u_n T_n.
IntPolynomial trial_polynomial(const std::vector<Rational>& u) {
    std::vector<Rational> acc(u.size() + 1, Rational(0));
    acc[0] = 1;
    for (std::size_t n = 1; n <= u.size(); ++n) {
        if (sgn(u[n - 1]) == 0) continue;
        const auto T = chebyshev_T(static_cast<unsigned>(n));
        for (std::size_t i = 0; i < T.coeffs().size(); ++i) acc[i] += 2 * u[n - 1] * Rational(T.coeffs()[i]);
    }
    Integer l = common_denominator(acc);
    std::vector<Integer> c;
    for (auto& a : acc) {
        Rational s = a * l;
        c.push_back(s.get_num());
    }
    IntPolynomial P(std::move(c));
    Integer ct = P.content();
    if (ct > 1) {
        std::vector<Integer> d;
        for (const auto& x : P.coeffs()) d.push_back(x / ct);
        P = IntPolynomial(std::move(d));
    }
    return P;
}

NonnegativityWitness nonnegativity_witness(const std::vector<Rational>& u) {
    NonnegativityWitness w;
    w.P = trial_polynomial(u);
    w.factors = squarefree_decomposition(w.P);
    for (const auto& [f, m] : w.factors) {
        std::size_t k = f.degree() > 0 ? count_roots_open(f, Rational(-1), Rational(1)) : 0;
        w.interior_roots.push_back(k);
        if (m % 2 == 1 && k > 0) {
            std::ostringstream os;
            os << "trial function is negative on (-1,1): factor " << f.to_string('x') << " changes sign there";
            throw InfeasibleTrialFunction(os.str(), f);
        }
    }
    // No sign change inside (-1,1); one positive sample fixes the sign.
    const Rational samples[] = {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-1, 3), Rational(2, 3), Rational(-2, 3)};
    std::size_t tried = 0;
    Rational x = 0;
    int s = 0;
    while (s == 0) {
        if (tried < std::size(samples)) {
            x = samples[tried];
        } else {
            x = Rational(1, static_cast<long>(tried + 2));
        }
        ++tried;
        s = w.P.sign_at(x);
    }
    if (s < 0) throw InfeasibleTrialFunction("trial function is negative on (-1,1)", w.P);
    w.sample_point = x;
    return w;
}

/// (g + S_plus + S_minus) / S_minus with S_pm = sum u_n q^(pm n/2).
SqrtQValue exact_bound(const Integer& q, int g, const std::vector<Rational>& u) {
    Rational a0 = g, a1 = 0, b0 = 0, b1 = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        unsigned n = static_cast<unsigned>(i + 1);
        if (n % 2 == 0) {
            Integer Q = ipow(q, n / 2);
            a0 += u[i] * Rational(Q) + u[i] / Rational(Q);
            b0 += u[i] / Rational(Q);
        } else {
            Integer lo = ipow(q, (n - 1) / 2);
            Integer hi = ipow(q, (n + 1) / 2);
            a1 += u[i] * Rational(lo) + u[i] / Rational(hi);
            b1 += u[i] / Rational(hi);
        }
    }
    if (is_perfect_square(q)) {
        Rational r(isqrt(q));
        return {(a0 + a1 * r) / (b0 + b1 * r), Rational(0), q};
    }
    // Multiply through by the conjugate of the denominator.
    Rational norm = b0 * b0 - Rational(q) * b1 * b1;
    Rational c = (a0 * b0 - Rational(q) * a1 * b1) / norm;
    Rational d = (a1 * b0 - a0 * b1) / norm;
    return {c, d, q};
}

double bound_double(double q, int g, const std::vector<double>& u) {
    double sp = 0, sm = 0, rq = std::sqrt(q);
    for (std::size_t i = 0; i < u.size(); ++i) {
        double p = std::pow(rq, static_cast<double>(i + 1));
        sp += u[i] * p;
        sm += u[i] / p;
    }
    return (g + sp + sm) / sm;
}

double trig_sum(const std::vector<double>& v, double theta) {
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += 2 * v[i] * std::cos(static_cast<double>(i + 1) * theta);
    return s;
}

/// Approximate min over theta of 2 sum v_n cos(n theta).
double trig_min(const std::vector<double>& v) {
    constexpr int kGrid = 2048;
    const double h = M_PI / kGrid;
    std::vector<std::pair<double, int>> vals;
    vals.reserve(kGrid + 1);
    for (int i = 0; i <= kGrid; ++i) vals.push_back({trig_sum(v, i * h), i});
    std::partial_sort(vals.begin(), vals.begin() + 4, vals.end());
    double best = vals[0].first;
    for (int k = 0; k < 4; ++k) {
        double a = std::max(0.0, (vals[k].second - 1) * h);
        double b = std::min(M_PI, (vals[k].second + 1) * h);
        const double phi = (std::sqrt(5.0) - 1) / 2;
        double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
        double f1 = trig_sum(v, x1), f2 = trig_sum(v, x2);
        for (int it = 0; it < 80; ++it) {
            if (f1 < f2) {
                b = x2;
                x2 = x1;
                f2 = f1;
                x1 = b - phi * (b - a);
                f1 = trig_sum(v, x1);
            } else {
                a = x1;
                x1 = x2;
                f1 = f2;
                x2 = a + phi * (b - a);
                f2 = trig_sum(v, x2);
            }
        }
        best = std::min({best, f1, f2});
    }
    return best;
}

/// v scaled so that min of 1 + 2 sum v_n cos(n theta) is (approximately) 0.
std::vector<double> radial_boundary(std::vector<double> v) {
    double m = trig_min(v);
    if (!(m < 0)) return {};
    double lambda = -1.0 / m;
    for (auto& x : v) x *= lambda;
    return v;
}

Rational dyadic_floor(double x, unsigned bits) {
    double scaled = std::floor(std::ldexp(x, static_cast<int>(bits)));
    Integer num;
    mpz_set_d(num.get_mpz_t(), scaled);
    Integer den = 1;
    den <<= bits;
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

int SqrtQValue::sign() const {
    if (sgn(d) == 0) return sgn(c);
    if (is_perfect_square(q)) return sgn(c + d * Rational(isqrt(q)));
    return sign_nonsquare(c, d, q);
}

Integer SqrtQValue::floor() const {
    double a = approx();
    Integer k;
    mpz_set_d(k.get_mpz_t(), std::floor(a));
    auto minus = [&](const Integer& n) { return SqrtQValue{c - Rational(n), d, q}.sign(); };
    while (minus(k) < 0) --k;
    while (minus(k + 1) >= 0) ++k;
    return k;
}

double SqrtQValue::approx() const { return c.get_d() + d.get_d() * std::sqrt(q.get_d()); }

std::string SqrtQValue::to_string() const {
    if (sgn(d) == 0) return c.get_str();
    std::string s = sgn(c) != 0 ? c.get_str() + (sgn(d) > 0 ? " + " : " - ") : (sgn(d) < 0 ? "-" : "");
    Rational ad = abs(d);
    if (ad != 1) s += ad.get_str() + "*";
    return s + "sqrt(" + q.get_str() + ")";
}

SqrtQValue operator-(const SqrtQValue& x, const SqrtQValue& y) {
    if (x.q != y.q) throw std::invalid_argument("values over different q");
    return {x.c - y.c, x.d - y.d, x.q};
}

IntPolynomial chebyshev_T(unsigned n) {
    IntPolynomial a{1}, b{0, 1};
    if (n == 0) return a;
    const IntPolynomial two_x{0, 2};
    for (unsigned k = 1; k < n; ++k) {
        IntPolynomial c = two_x * b - a;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

BoundCertificate bound_from_u(const Integer& q, int g, const std::vector<Rational>& u) {
    check_args(q, g);
    check_u(u);
    BoundCertificate cert;
    cert.q = q;
    cert.g = g;
    cert.u = u;
    cert.witness = nonnegativity_witness(u);
    cert.bound = exact_bound(q, g, u);
    cert.floor = cert.bound.floor();
    return cert;
}

bool verify_certificate(const BoundCertificate& cert) {
    try {
        BoundCertificate fresh = bound_from_u(cert.q, cert.g, cert.u);
        if (!(fresh.witness.P == cert.witness.P)) return false;
        if (fresh.witness.factors != cert.witness.factors) return false;
        if (fresh.witness.interior_roots != cert.witness.interior_roots) return false;
        if (cert.witness.P.sign_at(cert.witness.sample_point) <= 0) return false;
        if ((fresh.bound - cert.bound).sign() != 0) return false;
        return fresh.floor == cert.floor;
    } catch (const std::exception&) {
        return false;
    }
}

BoundCertificate optimize_u(const Integer& q, int g, unsigned D, const OptimizerBudget& budget) {
    check_args(q, g);
    if (D == 0 || D > 8) throw std::invalid_argument("D must be in 1..8");
    const double qd = q.get_d();

    auto objective = [&](const std::vector<double>& v) {
        if (v.empty()) return std::numeric_limits<double>::infinity();
        return bound_double(qd, g, v);
    };

    std::vector<double> weil(D, 0.0);
    weil[0] = 0.5;
    std::vector<double> fejer(D);
    for (unsigned n = 1; n <= D; ++n) fejer[n - 1] = 0.5 * (1.0 - static_cast<double>(n) / (D + 1));

    std::vector<double> u = radial_boundary(weil);
    double best = objective(u);
    {
        auto f = radial_boundary(fejer);
        if (objective(f) < best) {
            u = f;
            best = objective(f);
        }
    }

    for (unsigned k = 1; k <= budget.max_step_exponent; ++k) {
        const double step = std::ldexp(1.0, -static_cast<int>(k));
        for (unsigned sweep = 0; sweep < budget.max_sweeps_per_step; ++sweep) {
            bool improved = false;
            for (unsigned n = 0; n < D; ++n)
                for (double dir : {1.0, -1.0}) {
                    std::vector<double> v = u;
                    v[n] = std::max(0.0, v[n] + dir * step);
                    if (v == u) continue;
                    auto w = radial_boundary(v);
                    double b = objective(w);
                    if (b < best - 1e-12) {
                        u = std::move(w);
                        best = b;
                        improved = true;
                    }
                }
            if (!improved) break;
        }
    }

    // Exact seeds; the optimised point only replaces them if it certifies and is better.
    std::vector<Rational> weil_u(D, Rational(0));
    weil_u[0] = Rational(1, 2);
    BoundCertificate result = bound_from_u(q, g, weil_u);
    std::vector<Rational> fejer_u(D);
    for (unsigned n = 1; n <= D; ++n) fejer_u[n - 1] = Rational(D + 1 - n, D + 1);
    try {
        auto c = bound_from_u(q, g, fejer_u);
        if ((c.bound - result.bound).sign() < 0) result = std::move(c);
    } catch (const InfeasibleTrialFunction&) {
    }

    double eps = 4.0 * D * std::ldexp(1.0, -static_cast<int>(budget.grid_bits)) + 1e-9;
    for (int attempt = 0; attempt < 30; ++attempt, eps *= 2) {
        std::vector<Rational> r(D);
        bool any = false;
        for (unsigned n = 0; n < D; ++n) {
            r[n] = dyadic_floor(std::max(0.0, u[n] * (1 - eps)), budget.grid_bits);
            any = any || sgn(r[n]) > 0;
        }
        if (!any) break;
        try {
            auto c = bound_from_u(q, g, r);
            if ((c.bound - result.bound).sign() < 0) result = std::move(c);
            break;
        } catch (const InfeasibleTrialFunction&) {
        }
    }
    return result;
}

Integer ihara_bound(const Integer& q, int g) {
    check_args(q, g);
    Integer G = g;
    Integer M = (8 * q + 1) * G * G + 4 * (q * q - q) * G;
    Integer t = isqrt(M) - G;
    Integer half;
    mpz_fdiv_q_ui(half.get_mpz_t(), t.get_mpz_t(), 2);
    return q + 1 + half;
}

MinGenusResult min_genus(const Integer& q, const Integer& N, unsigned D, int g_cap) {
    if (N <= q + 1) throw std::invalid_argument("N must exceed q + 1");
    MinGenusResult res;
    for (int g = 1; g <= g_cap; ++g) {
        auto c = optimize_u(q, g, D);
        if (c.floor >= N) {
            res.genus = g;
            res.attained = std::move(c);
            return res;
        }
        res.excluded.push_back(std::move(c));
    }
    throw std::range_error("genus cap " + std::to_string(g_cap) + " reached");
}

}  // namespace curvebound
