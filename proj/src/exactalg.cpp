#include "curvebound/exactalg.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace curvebound {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[k] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const Integer& root) { return IntPolynomial(std::vector<Integer>{-root, 1}); }

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

const Integer& IntPolynomial::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

bool IntPolynomial::is_monic() const { return !c_.empty() && c_.back() == 1; }

Integer IntPolynomial::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
    // den^deg * p(num/den), den > 0
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = 0;
    Integer den_pow = 1;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * num + *it * den_pow;
        den_pow *= den;
    }
    return sgn(acc);
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

Integer IntPolynomial::content() const {
    Integer g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (c_.empty()) return {};
    Integer g = content();
    if (c_.back() < 0) g = -g;
    std::vector<Integer> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::taylor_shift(const Integer& shift) const {
    std::vector<Integer> v = c_;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) v[j] += shift * v[j + 1];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Integer> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

std::string IntPolynomial::to_string(char var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Integer& c = c_[i];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != 1) os << mag;
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

IntPolynomial pow(const IntPolynomial& p, unsigned e) {
    IntPolynomial result{1};
    IntPolynomial base = p;
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

PseudoDivision pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
    if (a.degree() < b.degree()) return {IntPolynomial{}, a};
    const int db = b.degree();
    const Integer& lc = b.leading();
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
        // r <- lc * r - r_k t^(k-db) b; q <- lc * q + r_k t^(k-db)
        Integer rk = r[static_cast<std::size_t>(k)];
        for (auto& c : q) c *= lc;
        q[static_cast<std::size_t>(k - db)] += rk;
        for (int i = 0; i <= k; ++i) r[static_cast<std::size_t>(i)] *= lc;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + k - db)] -= rk * b.coeffs()[static_cast<std::size_t>(i)];
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
    const int db = b.degree();
    const Integer& lc = b.leading();
    std::vector<Integer> r = a.coeffs();
    std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db + 1));
    for (int k = a.degree(); k >= db; --k) {
        Integer& rk = r[static_cast<std::size_t>(k)];
        if (rk == 0) continue;
        if (!mpz_divisible_p(rk.get_mpz_t(), lc.get_mpz_t())) throw std::domain_error("inexact polynomial division");
        Integer t;
        mpz_divexact(t.get_mpz_t(), rk.get_mpz_t(), lc.get_mpz_t());
        q[static_cast<std::size_t>(k - db)] = t;
        for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + k - db)] -= t * b.coeffs()[static_cast<std::size_t>(i)];
    }
    for (const auto& c : r)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return IntPolynomial(std::move(q));
}

bool divides(const IntPolynomial& b, const IntPolynomial& a) {
    try {
        (void)exact_divide(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPolynomial x = a.primitive_part();
    IntPolynomial y = b.primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return IntPolynomial{1};
        IntPolynomial r = pseudo_divide(x, y).remainder;
        x = std::move(y);
        y = r.primitive_part();
    }
    return x.primitive_part();
}

IntPolynomial radical(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("radical of the zero polynomial");
    IntPolynomial g = gcd(f, f.derivative());
    return exact_divide(f.primitive_part(), g).primitive_part();
}

std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("square-free decomposition of the zero polynomial");
    // A_k = gcd chain; B_k = A_{k-1}/A_k collects factors of multiplicity >= k.
    std::vector<IntPolynomial> B;
    IntPolynomial A = f.primitive_part();
    while (A.degree() > 0) {
        IntPolynomial next = gcd(A, A.derivative());
        B.push_back(exact_divide(A, next).primitive_part());
        A = std::move(next);
    }
    std::vector<std::pair<IntPolynomial, int>> out;
    for (std::size_t k = 0; k < B.size(); ++k) {
        IntPolynomial exact = k + 1 < B.size() ? exact_divide(B[k], B[k + 1]).primitive_part() : B[k];
        if (exact.degree() > 0) out.emplace_back(std::move(exact), static_cast<int>(k + 1));
    }
    return out;
}

namespace {

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

}  // namespace

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
    const int m = f.degree();
    const int n = g.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), f.leading().get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        Integer r;
        mpz_pow_ui(r.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Integer>> syl(size, std::vector<Integer>(size));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coeffs()[static_cast<std::size_t>(m - i)];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g.coeffs()[static_cast<std::size_t>(n - i)];
    return bareiss_determinant(std::move(syl));
}

int QuadraticValue::sign() const {
    const int sa = sgn(a);
    const int sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
    Integer lhs = a * a;
    Integer rhs = d * b * b;
    int c = cmp(lhs, rhs);
    if (c > 0) return sa;
    if (c < 0) return sb;
    return 0;
}

QuadraticValue eval_at_sqrt_multiple(const IntPolynomial& p, const Integer& b, const Integer& d) {
    // (b sqrt d)^i = b^i d^(i/2) for even i, b^i d^((i-1)/2) sqrt d for odd i.
    QuadraticValue v{0, 0, d};
    Integer bpow = 1;
    Integer dpow = 1;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i % 2 == 0) {
            v.a += p.coeffs()[i] * bpow * dpow;
        } else {
            v.b += p.coeffs()[i] * bpow * dpow;
            dpow *= d;
        }
        bpow *= b;
    }
    return v;
}

bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
    std::vector<IntPolynomial> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    IntPolynomial d = p.derivative();
    if (d.is_zero()) return chain;
    {
        Integer c = d.content();
        std::vector<Integer> v(d.coeffs().size());
        for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), d.coeffs()[i].get_mpz_t(), c.get_mpz_t());
        chain.emplace_back(std::move(v));
    }
    while (chain.back().degree() > 0) {
        const IntPolynomial& a = chain[chain.size() - 2];
        const IntPolynomial& b = chain.back();
        PseudoDivision pd = pseudo_divide(a, b);
        if (pd.remainder.is_zero()) break;
        IntPolynomial r = std::move(pd.remainder);
        const int e = a.degree() - b.degree() + 1;
        // Keep r a positive multiple of rem(a, b).
        if (b.leading() < 0 && e % 2 != 0) r = -r;
        Integer c = r.content();
        std::vector<Integer> v(r.coeffs().size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpz_divexact(v[i].get_mpz_t(), r.coeffs()[i].get_mpz_t(), c.get_mpz_t());
            v[i] = -v[i];
        }
        chain.emplace_back(std::move(v));
    }
    return chain;
}

namespace {

std::size_t variations(const std::vector<int>& signs) {
    std::size_t v = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

std::size_t variations_at_infinity(const std::vector<IntPolynomial>& chain, bool positive) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) {
        int sg = sgn(p.leading());
        if (!positive && p.degree() % 2 != 0) sg = -sg;
        s.push_back(sg);
    }
    return variations(s);
}

std::size_t variations_at(const std::vector<IntPolynomial>& chain, const Rational& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(p.sign_at(x));
    return variations(s);
}

std::size_t variations_at(const std::vector<IntPolynomial>& chain, const Integer& b, const Integer& d) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(eval_at_sqrt_multiple(p, b, d).sign());
    return variations(s);
}

IntPolynomial squarefree_part(const IntPolynomial& p) { return exact_divide(p.primitive_part(), gcd(p, p.derivative())); }

}  // namespace

std::size_t count_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    auto chain = sturm_chain(squarefree_part(p));
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::size_t count_roots_open(const IntPolynomial& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (lo >= hi) return 0;
    IntPolynomial s = squarefree_part(p);
    auto chain = sturm_chain(s);
    // With zero signs dropped, V(lo) - V(hi) counts the roots in (lo, hi].
    std::size_t n = variations_at(chain, lo) - variations_at(chain, hi);
    if (s.sign_at(hi) == 0) --n;
    return n;
}

SymmetricIntervalRoots sturm_roots_in_symmetric_interval(const IntPolynomial& h, const Integer& q) {
    if (h.is_zero()) throw std::invalid_argument("interval test on the zero polynomial");
    if (q <= 0) throw std::invalid_argument("q must be positive");
    IntPolynomial s = squarefree_part(h);
    auto chain = sturm_chain(s);
    SymmetricIntervalRoots out;
    if (is_perfect_square(q)) {
        Integer r = 2 * sqrt(q);
        Rational lo(-r), hi(r);
        out.count = variations_at(chain, lo) - variations_at(chain, hi);
        if (s.sign_at(lo) == 0) ++out.count;
    } else {
        out.count = variations_at(chain, Integer(-2), q) - variations_at(chain, Integer(2), q);
        if (eval_at_sqrt_multiple(s, Integer(-2), q).sign() == 0) ++out.count;
    }
    out.all_real_in_interval = out.count == static_cast<std::size_t>(s.degree());
    return out;
}

int mobius(unsigned n) {
    if (n == 0) throw std::invalid_argument("mobius(0)");
    int result = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

std::vector<Integer> mobius_a_from_N(std::span<const Integer> N) {
    std::vector<Integer> a(N.size());
    for (std::size_t n = 1; n <= N.size(); ++n) {
        Integer sum = 0;
        for (std::size_t d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            int mu = mobius(static_cast<unsigned>(n / d));
            if (mu != 0) sum += mu * N[d - 1];
        }
        if (!mpz_divisible_ui_p(sum.get_mpz_t(), n)) {
            std::ostringstream os;
            os << "inconsistent point counts: a_" << n << " = " << sum << "/" << n << " is not an integer";
            throw std::domain_error(os.str());
        }
        mpz_divexact_ui(a[n - 1].get_mpz_t(), sum.get_mpz_t(), n);
    }
    return a;
}

std::vector<Integer> N_from_a(std::span<const Integer> a) {
    std::vector<Integer> N(a.size());
    for (std::size_t n = 1; n <= a.size(); ++n)
        for (std::size_t d = 1; d <= n; ++d)
            if (n % d == 0) N[n - 1] += static_cast<unsigned long>(d) * a[d - 1];
    return N;
}

}  // namespace curvebound
