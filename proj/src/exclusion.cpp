#include "curvebound/exclusion.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace curvebound {

const char* to_string(ExclusionStatus s) {
    switch (s) {
        case ExclusionStatus::Excluded: return "EXCLUDED";
        case ExclusionStatus::EllipticMap: return "ELLIPTIC_MAP";
        case ExclusionStatus::NoConclusion: return "NO_CONCLUSION";
    }
    return "?";
}

Factorization canonical(Factorization f) {
    for (const auto& [p, m] : f) {
        if (p.degree() < 1) throw std::invalid_argument("factors must be nonconstant");
        if (m < 1) throw std::invalid_argument("multiplicities must be positive");
    }
    std::sort(f.begin(), f.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    Factorization out;
    for (auto& [p, m] : f) {
        if (!out.empty() && out.back().first == p)
            out.back().second += m;
        else
            out.emplace_back(std::move(p), m);
    }
    return out;
}

ExclusionVerdict serre_test(const IntPolynomial& h, const Factorization& factors) {
    Factorization f = canonical(factors);
    IntPolynomial product{1};
    for (const auto& [p, m] : f) product *= pow(p, static_cast<unsigned>(m));
    if (product != h) throw std::invalid_argument("the factorization does not multiply back to h");

    ExclusionVerdict v;
    const std::size_t k = f.size();
    if (k < 2) {
        v.notes = "no proper split: h has a single distinct factor";
        return v;
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        IntPolynomial h1{1};
        IntPolynomial h2{1};
        for (std::size_t i = 0; i < k; ++i) {
            IntPolynomial part = pow(f[i].first, static_cast<unsigned>(f[i].second));
            if (i + 1 < k && (mask >> i) & 1U)
                h1 *= part;
            else
                h2 *= part;
        }
        Integer res = resultant(h1, h2);
        if (res == 1 || res == -1) {
            v.status = ExclusionStatus::Excluded;
            v.h1 = std::move(h1);
            v.h2 = std::move(h2);
            v.resultant = res;
            return v;
        }
    }
    v.notes = "no split has resultant +-1";
    return v;
}

ExclusionVerdict howe_lauter_test(const IntPolynomial& h, const Integer& mu) {
    IntPolynomial lin = IntPolynomial::linear(mu);
    if (!divides(lin, h)) throw std::invalid_argument("t - mu does not divide h");
    IntPolynomial h2 = exact_divide(h, lin);
    if (h2.degree() < 1) throw std::invalid_argument("h / (t - mu) is constant");
    if (h2.eval(mu) == 0) throw std::invalid_argument("mu is a repeated root of h");
    ExclusionVerdict v;
    v.mu = mu;
    v.h1 = lin;
    v.h2 = h2;
    v.r = resultant(lin, radical(h2));
    if (v.r == 1 || v.r == -1) {
        v.notes = "resultant is +-1";
        return v;
    }
    v.status = ExclusionStatus::EllipticMap;
    v.notes = "map of degree dividing |r| to an elliptic curve with real Weil polynomial t - mu";
    return v;
}

// ---------------------------------------------------------------- parsing

namespace {

class FactorParser {
   public:
    explicit FactorParser(std::string_view s) : s_(s) {}

    Factorization parse() {
        Factorization out;
        skip();
        if (i_ >= s_.size()) fail("empty factorization");
        while (i_ < s_.size()) {
            IntPolynomial f;
            if (s_[i_] == '(') {
                ++i_;
                f = polynomial();
                skip();
                if (i_ >= s_.size() || s_[i_] != ')') fail("expected ')'");
                ++i_;
            } else if (s_[i_] == 't') {
                ++i_;
                f = IntPolynomial{0, 1};
            } else {
                fail("expected '(' or 't'");
            }
            int m = 1;
            skip();
            if (i_ < s_.size() && s_[i_] == '^') {
                ++i_;
                m = static_cast<int>(integer().get_si());
                if (m < 1) fail("multiplicity must be positive");
            }
            if (f.degree() < 1) fail("constant factor");
            if (!f.is_monic()) fail("factors must be monic");
            out.emplace_back(std::move(f), m);
            skip();
            if (i_ < s_.size() && s_[i_] == '*') {
                ++i_;
                skip();
                if (i_ >= s_.size()) fail("dangling '*'");
            }
        }
        return canonical(std::move(out));
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at position " + std::to_string(i_));
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    Integer integer() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected an integer");
        return Integer(std::string(s_.substr(start, i_ - start)));
    }

    IntPolynomial polynomial() {
        IntPolynomial acc;
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
                sign = s_[i_] == '-' ? -1 : 1;
                ++i_;
            } else if (!first) {
                return acc;
            }
            acc += term() * Integer(sign);
            first = false;
        }
    }

    IntPolynomial term() {
        IntPolynomial t = atom();
        while (true) {
            skip();
            if (i_ < s_.size() && s_[i_] == '*') {
                ++i_;
                t *= atom();
            } else {
                return t;
            }
        }
    }

    IntPolynomial atom() {
        skip();
        if (i_ < s_.size() && s_[i_] == 't') {
            ++i_;
            skip();
            unsigned long e = 1;
            if (i_ < s_.size() && s_[i_] == '^') {
                ++i_;
                Integer v = integer();
                if (v > 64) fail("exponent too large");
                e = v.get_ui();
            }
            return IntPolynomial::monomial(Integer(1), e);
        }
        return IntPolynomial::constant(integer());
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace

Factorization parse_factored(std::string_view text) { return FactorParser(text).parse(); }

}  // namespace curvebound
