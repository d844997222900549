#include "curvebound/gfarith.hpp"

#include <sstream>
#include <stdexcept>

namespace curvebound {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace gf {

namespace {

void trim(PrimePoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, unsigned p) {
    // Fermat; p is prime and small.
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    unsigned e = p - 2;
    while (e > 0) {
        if (e & 1U) result = result * base % p;
        base = base * base % p;
        e >>= 1U;
    }
    return static_cast<std::uint32_t>(result);
}

PrimePoly mod(PrimePoly a, const PrimePoly& b, unsigned p) {
    trim(a);
    const std::uint32_t lc_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lc_inv % p;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = factor * b[i] % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

PrimePoly mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, unsigned p) {
    if (a.empty() || b.empty()) return {};
    PrimePoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    return mod(std::move(r), m, p);
}

}  // namespace

PrimePoly reduce(const IntPolynomial& f, unsigned p) {
    PrimePoly out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Integer r;
        mpz_fdiv_r_ui(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), p);
        out[i] = static_cast<std::uint32_t>(r.get_ui());
    }
    trim(out);
    return out;
}

PrimePoly derivative(const PrimePoly& f, unsigned p) {
    if (f.size() <= 1) return {};
    PrimePoly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(f[i]) * (i % p) % p);
    trim(d);
    return d;
}

PrimePoly gcd(PrimePoly a, PrimePoly b, unsigned p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PrimePoly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint32_t inv = inv_mod(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
    }
    return a;
}

bool is_squarefree(const PrimePoly& f, unsigned p) {
    if (f.empty()) return false;
    return gcd(f, derivative(f, p), p).size() == 1;
}

bool is_irreducible(const PrimePoly& f, unsigned p) {
    if (f.size() < 2) return false;
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    PrimePoly x{0, 1};
    PrimePoly power = x;  // t^(p^k) mod f
    for (std::size_t k = 1; k <= n / 2; ++k) {
        PrimePoly acc{1};
        PrimePoly base = power;
        unsigned e = p;
        while (e > 0) {
            if (e & 1U) acc = mulmod(acc, base, f, p);
            base = mulmod(base, base, f, p);
            e >>= 1U;
        }
        power = acc;
        PrimePoly diff = power;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        trim(diff);
        if (diff.empty()) return false;
        if (gcd(f, diff, p).size() > 1) return false;
    }
    return true;
}

}  // namespace gf

FieldDescriptor::FieldDescriptor(unsigned p, unsigned n) : p_(p), n_(n) {
    if (p < 3 || p > 1000 || !is_prime(p)) throw std::invalid_argument("field characteristic must be an odd prime <= 1000");
    if (n < 1 || n > kMaxExtensionDegree) throw std::invalid_argument("extension degree must lie in [1, 8]");
    if (n == 1) {
        modulus_ = {0, 1};
        return;
    }
    // Scan monic polynomials with (c_0, ..., c_{n-1}) in lexicographic order.
    gf::PrimePoly cand(n + 1, 0);
    cand[n] = 1;
    while (true) {
        if (gf::is_irreducible(cand, p)) {
            modulus_ = cand;
            return;
        }
        std::size_t i = n;
        while (i-- > 0) {
            if (++cand[i] < p) break;
            cand[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    throw std::logic_error("no irreducible polynomial found");
}

Integer FieldDescriptor::order() const {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p_, n_);
    return q;
}

std::uint64_t FieldDescriptor::enumerable_size() const {
    Integer q = order();
    if (q > kEnumerationCap) {
        std::ostringstream os;
        os << "field of order " << q << " exceeds the enumeration cap " << kEnumerationCap;
        throw std::length_error(os.str());
    }
    return q.get_ui();
}

FieldElement FieldDescriptor::from_integer(long v) const {
    FieldElement e;
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    e.c[0] = static_cast<std::uint32_t>(r);
    return e;
}

FieldElement FieldDescriptor::from_integer(const Integer& v) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    FieldElement e;
    e.c[0] = static_cast<std::uint32_t>(r.get_ui());
    return e;
}

FieldElement FieldDescriptor::from_index(std::uint64_t index) const {
    FieldElement e;
    for (unsigned i = n_; i-- > 0;) {
        e.c[i] = static_cast<std::uint32_t>(index % p_);
        index /= p_;
    }
    return e;
}

std::uint64_t FieldDescriptor::index_of(const FieldElement& x) const {
    std::uint64_t idx = 0;
    for (unsigned i = 0; i < n_; ++i) idx = idx * p_ + x.c[i];
    return idx;
}

FieldElement FieldDescriptor::add(const FieldElement& x, const FieldElement& y) const {
    FieldElement r;
    for (unsigned i = 0; i < n_; ++i) {
        std::uint32_t s = x.c[i] + y.c[i];
        r.c[i] = s >= p_ ? s - p_ : s;
    }
    return r;
}

FieldElement FieldDescriptor::sub(const FieldElement& x, const FieldElement& y) const {
    FieldElement r;
    for (unsigned i = 0; i < n_; ++i) r.c[i] = x.c[i] >= y.c[i] ? x.c[i] - y.c[i] : x.c[i] + p_ - y.c[i];
    return r;
}

FieldElement FieldDescriptor::neg(const FieldElement& x) const { return sub(zero(), x); }

FieldElement FieldDescriptor::mul(const FieldElement& x, const FieldElement& y) const {
    // Products stay below 2n p^2 until the final reduction, so one modulus
    // per coefficient is enough.
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> prod{};
    for (unsigned i = 0; i < n_; ++i) {
        if (x.c[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j) prod[i + j] += static_cast<std::uint64_t>(x.c[i]) * y.c[j];
    }
    // t^n = -(m_0 + ... + m_{n-1} t^{n-1})
    for (unsigned k = 2 * n_ - 1; k-- > n_;) {
        std::uint64_t top = prod[k] % p_;
        if (top == 0) continue;
        for (unsigned i = 0; i < n_; ++i) prod[k - n_ + i] += top * (modulus_[i] == 0 ? 0 : p_ - modulus_[i]);
    }
    FieldElement r;
    for (unsigned i = 0; i < n_; ++i) r.c[i] = static_cast<std::uint32_t>(prod[i] % p_);
    return r;
}

FieldElement FieldDescriptor::pow(const FieldElement& x, const Integer& e) const {
    if (e < 0) throw std::invalid_argument("negative exponent");
    FieldElement result = one();
    FieldElement base = x;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, base);
        base = mul(base, base);
    }
    return result;
}

FieldElement FieldDescriptor::frobenius(const FieldElement& x) const { return pow(x, Integer(p_)); }

FieldElement FieldDescriptor::eval(const IntPolynomial& f, const FieldElement& x) const {
    FieldElement acc;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = add(mul(acc, x), from_integer(c[i]));
    return acc;
}

int FieldDescriptor::quadratic_character(const FieldElement& x) const {
    if (is_zero(x)) return 0;
    Integer e = (order() - 1) / 2;
    FieldElement r = pow(x, e);
    if (r == one()) return 1;
    if (r == neg(one())) return -1;
    throw std::logic_error("quadratic character is not +-1; modulus is not irreducible");
}

FieldDescriptor field(unsigned p, unsigned n) { return FieldDescriptor(p, n); }

ElementRange::iterator::iterator(const FieldDescriptor* field, std::uint64_t index) : field_(field), index_(index) {
    if (field_ != nullptr) current_ = field_->from_index(index);
}

ElementRange::iterator& ElementRange::iterator::operator++() {
    ++index_;
    // Increment as a base-p counter whose least significant digit is c_{n-1}.
    for (unsigned i = field_->n(); i-- > 0;) {
        if (++current_.c[i] < field_->p()) break;
        current_.c[i] = 0;
    }
    return *this;
}

ElementRange::ElementRange(const FieldDescriptor& field) : field_(&field), size_(field.enumerable_size()) {}

ElementRange::iterator ElementRange::begin() const { return iterator(field_, 0); }

ElementRange::iterator ElementRange::end() const {
    iterator it;
    it = iterator(nullptr, size_);
    return it;
}

}  // namespace curvebound
