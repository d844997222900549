#include "curvebound/zeta.hpp"

#include <sstream>

namespace curvebound {

namespace {

Integer ipow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

void check_genus(int g) {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
}

}  // namespace

IntPolynomial L_from_counts(const Integer& q, int g, std::span<const Integer> N) {
    check_genus(g);
    if (N.size() < static_cast<std::size_t>(g)) throw std::invalid_argument("L_from_counts needs N_1..N_g");
    std::vector<Integer> c(g + 1);
    for (int k = 1; k <= g; ++k) c[k] = N[k - 1] - ipow(q, k) - 1;
    std::vector<Integer> b(2 * g + 1);
    b[0] = 1;
    for (int n = 1; n <= g; ++n) {
        Rational acc = 0;
        for (int k = 1; k <= n; ++k) acc += Rational(c[k] * b[n - k]);
        acc /= n;
        if (acc.get_den() != 1) {
            std::ostringstream os;
            os << "coefficient b_" << n << " = " << acc << " is not integral; the counts are inconsistent";
            throw std::domain_error(os.str());
        }
        b[n] = acc.get_num();
    }
    for (int i = 0; i < g; ++i) b[2 * g - i] = ipow(q, g - i) * b[i];
    return IntPolynomial(std::move(b));
}

IntPolynomial L_from_h(const Integer& q, int g, const IntPolynomial& h) {
    check_genus(g);
    if (h.degree() > g) throw std::invalid_argument("deg h exceeds the genus");
    std::vector<Integer> b(2 * g + 1);
    for (int j = 0; j <= h.degree(); ++j) {
        if (h.coeff(j) == 0) continue;
        // h_j t^(g-j) (qt^2 + 1)^j
        for (int i = 0; i <= j; ++i) b[g - j + 2 * i] += h.coeff(j) * binomial(j, i) * ipow(q, i);
    }
    return IntPolynomial(std::move(b));
}

IntPolynomial h_from_L(const Integer& q, int g, const IntPolynomial& L) {
    check_genus(g);
    if (L.degree() > 2 * g) throw SymmetryError("deg L exceeds 2g", -1);
    for (int i = 0; i <= g; ++i) {
        if (L.coeff(2 * g - i) != ipow(q, g - i) * L.coeff(i)) {
            std::ostringstream os;
            os << "functional symmetry b_{2g-i} = q^(g-i) b_i fails at i = " << i;
            throw SymmetryError(os.str(), i);
        }
    }
    std::vector<Integer> h(g + 1);
    for (int j = g; j >= 0; --j) {
        Integer rhs = L.coeff(g + j);
        for (int jp = j + 2; jp <= g; jp += 2) rhs -= h[jp] * binomial(jp, (jp + j) / 2) * ipow(q, (jp + j) / 2);
        Integer qj = ipow(q, j);
        if (rhs % qj != 0) {
            std::ostringstream os;
            os << "coefficient h_" << j << " is not integral";
            throw SymmetryError(os.str(), -1);
        }
        h[j] = rhs / qj;
    }
    IntPolynomial out(std::move(h));
    if (L_from_h(q, g, out) != L) throw SymmetryError("L is not of the form t^g h(qt + 1/t)", -1);
    return out;
}

std::vector<Integer> N_from_L(const Integer& q, int g, const IntPolynomial& L, unsigned depth) {
    check_genus(g);
    if (L.coeff(0) != 1) throw std::invalid_argument("L(0) must be 1");
    std::vector<Integer> c(depth + 1);
    std::vector<Integer> N;
    for (unsigned n = 1; n <= depth; ++n) {
        Integer v = Integer(n) * L.coeff(n);
        for (unsigned k = 1; k < n; ++k) v -= c[k] * L.coeff(n - k);
        c[n] = v;
        N.push_back(v + ipow(q, n) + 1);
    }
    return N;
}

std::vector<Integer> N_from_h(const Integer& q, int g, const IntPolynomial& h, unsigned depth) {
    check_genus(g);
    if (h.degree() != g || !h.is_monic()) throw std::invalid_argument("h must be monic of degree g");
    // Newton: s_k = -(sum_{j<k} e'_j s_{k-j}) - k e'_k, e'_j = coeff of t^(g-j).
    std::vector<Integer> s(depth + 1);
    s[0] = g;
    for (unsigned k = 1; k <= depth; ++k) {
        Integer v = 0;
        for (unsigned j = 1; j < k && j <= static_cast<unsigned>(g); ++j) v -= h.coeff(g - j) * s[k - j];
        if (k <= static_cast<unsigned>(g)) v -= Integer(k) * h.coeff(g - k);
        s[k] = v;
    }
    // W_n(mu) as integer polynomials in mu.
    IntPolynomial mu{0, 1};
    IntPolynomial w_prev{2};
    IntPolynomial w_cur = mu;
    std::vector<Integer> N;
    for (unsigned n = 1; n <= depth; ++n) {
        if (n > 1) {
            IntPolynomial next = w_cur * mu - w_prev * q;
            w_prev = std::move(w_cur);
            w_cur = std::move(next);
        }
        Integer trace = 0;
        for (int k = 0; k <= w_cur.degree(); ++k) trace += w_cur.coeff(k) * s[k];
        N.push_back(ipow(q, n) + 1 - trace);
    }
    return N;
}

std::vector<Integer> a_from_h(const Integer& q, int g, const IntPolynomial& h, unsigned depth) {
    auto N = N_from_h(q, g, h, depth);
    return mobius_a_from_N(N);
}

WeilData weil_data_from_h(const Integer& q, int g, const IntPolynomial& h, unsigned depth) {
    WeilData wd;
    wd.q = q;
    wd.g = g;
    wd.h = h;
    wd.L = L_from_h(q, g, h);
    wd.N = N_from_h(q, g, h, depth);
    wd.a = mobius_a_from_N(wd.N);
    return wd;
}

WeilData weil_data_from_counts(const Integer& q, int g, std::span<const Integer> N, unsigned depth) {
    WeilData wd;
    wd.q = q;
    wd.g = g;
    wd.L = L_from_counts(q, g, N);
    wd.h = h_from_L(q, g, wd.L);
    wd.N = N_from_L(q, g, wd.L, depth);
    wd.a = mobius_a_from_N(wd.N);
    return wd;
}

std::vector<ValidationCheck> validate(const WeilData& wd) {
    std::vector<ValidationCheck> out;
    auto add = [&](std::string name, bool ok, std::string detail = {}) { out.push_back({std::move(name), ok, std::move(detail)}); };
    const int g = wd.g;
    const Integer qg = g >= 0 ? ipow(wd.q, g) : Integer(0);

    add("degree of L is 2g", g >= 0 && wd.L.degree() == 2 * g, "deg L = " + std::to_string(wd.L.degree()));
    add("L(0) = 1", wd.L.coeff(0) == 1);
    add("leading coefficient of L is q^g", g >= 0 && wd.L.coeff(2 * g) == qg);

    int bad_index = -1;
    for (int i = 0; i <= g && bad_index < 0; ++i)
        if (wd.L.coeff(2 * g - i) != ipow(wd.q, g - i) * wd.L.coeff(i)) bad_index = i;
    add("functional symmetry", bad_index < 0, bad_index < 0 ? "" : "fails at i = " + std::to_string(bad_index));

    bool h_shape = wd.h.degree() == g && wd.h.is_monic();
    add("h is monic of degree g", h_shape);
    add("L(t) = t^g h(qt + 1/t)", g >= 0 && wd.h.degree() <= g && L_from_h(wd.q, g, wd.h) == wd.L);

    bool n_ok = wd.L.coeff(0) == 1;
    std::string n_detail;
    if (n_ok) {
        auto predicted = N_from_L(wd.q, g, wd.L, static_cast<unsigned>(wd.N.size()));
        for (std::size_t i = 0; i < wd.N.size() && n_ok; ++i)
            if (predicted[i] != wd.N[i]) {
                n_ok = false;
                n_detail = "N_" + std::to_string(i + 1) + " differs from the prediction " + predicted[i].get_str();
            }
    }
    add("N agrees with L", n_ok, n_detail);

    bool a_ok = wd.a.size() == wd.N.size() && N_from_a(wd.a) == wd.N;
    add("N_n = sum_{d|n} d a_d", a_ok);

    std::string neg;
    for (std::size_t i = 0; i < wd.a.size() && neg.empty(); ++i)
        if (wd.a[i] < 0) neg = "a_" + std::to_string(i + 1) + " = " + wd.a[i].get_str();
    add("a_d >= 0", neg.empty(), neg);

    bool roots_ok = h_shape && sturm_roots_in_symmetric_interval(wd.h, wd.q).all_real_in_interval;
    add("roots of h real in [-2 sqrt q, 2 sqrt q]", roots_ok);
    return out;
}

bool all_passed(const std::vector<ValidationCheck>& checks) {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string format_prefix(std::span<const Integer> a, std::size_t shown) {
    std::ostringstream os;
    os << '[';
    std::size_t k = std::min(shown, a.size());
    for (std::size_t i = 0; i < k; ++i) os << (i ? ", " : "") << a[i];
    if (a.size() > k) os << ", ...";
    os << ']';
    return os.str();
}

}  // namespace curvebound
