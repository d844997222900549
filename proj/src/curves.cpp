#include "curvebound/curves.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace curvebound {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

IntPolynomial reduce_mod(const IntPolynomial& f, unsigned p) {
    gf::PrimePoly r = gf::reduce(f, p);
    std::vector<Integer> v;
    v.reserve(r.size());
    for (auto c : r) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

void check_rhs(const IntPolynomial& f, unsigned p, const char* what) {
    gf::PrimePoly r = gf::reduce(f, p);
    if (r.size() < 2) throw std::invalid_argument(std::string(what) + " is constant modulo p");
    if (!gf::is_squarefree(r, p)) throw std::invalid_argument(std::string(what) + " is not square-free modulo p");
}

int hyperelliptic_genus(const IntPolynomial& f) { return (f.degree() - 1) / 2; }

}  // namespace

int CurveSpec::genus() const {
    if (kind == CurveKind::HyperellipticForm) return hyperelliptic_genus(f);
    return hyperelliptic_genus(f) + hyperelliptic_genus(g) + hyperelliptic_genus(reduce_mod(f * g, p));
}

std::string CurveSpec::to_string() const {
    std::ostringstream os;
    os << f_var << "^2 = " << f.to_string('x');
    if (kind == CurveKind::FiberProduct) os << "; " << g_var << "^2 = " << g.to_string('x');
    os << " over GF(" << p << ")";
    return os.str();
}

CurveSpec make_hyperelliptic(const IntPolynomial& f, unsigned p, char var) {
    (void)field(p, 1);
    check_rhs(f, p, "right-hand side");
    CurveSpec spec;
    spec.kind = CurveKind::HyperellipticForm;
    spec.p = p;
    spec.f = reduce_mod(f, p);
    spec.f_var = var;
    return spec;
}

CurveSpec make_fiber_product(const IntPolynomial& f, const IntPolynomial& g, unsigned p) {
    (void)field(p, 1);
    check_rhs(f, p, "first right-hand side");
    check_rhs(g, p, "second right-hand side");
    check_rhs(f * g, p, "product of right-hand sides");
    CurveSpec spec;
    spec.kind = CurveKind::FiberProduct;
    spec.p = p;
    spec.f = reduce_mod(f, p);
    spec.g = reduce_mod(g, p);
    return spec;
}

std::array<CurveSpec, 3> quadratic_subcovers(const CurveSpec& spec) {
    if (spec.kind != CurveKind::FiberProduct) throw std::invalid_argument("quadratic subcovers need a fiber product");
    return {make_hyperelliptic(spec.f, spec.p, spec.f_var), make_hyperelliptic(spec.g, spec.p, spec.g_var),
            make_hyperelliptic(spec.f * spec.g, spec.p, 'w')};
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Int, Ident, Caret, Equals, Plus, Minus, Star, Semicolon, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Int, std::string(s.substr(start, i - start)), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
            continue;
        }
        Tok k;
        switch (ch) {
            case '^': k = Tok::Caret; break;
            case '=': k = Tok::Equals; break;
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case ';': k = Tok::Semicolon; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default: throw ParseError(std::string("unexpected character '") + ch + "'", i);
        }
        out.push_back({k, std::string(1, ch), i});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
   public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    CurveSpec parse() {
        std::vector<std::pair<char, IntPolynomial>> eqs;
        std::vector<std::size_t> eq_pos;
        eq_pos.push_back(peek().pos);
        eqs.push_back(equation());
        if (peek().kind == Tok::Semicolon) {
            advance();
            eq_pos.push_back(peek().pos);
            eqs.push_back(equation());
        }
        if (peek().kind == Tok::Semicolon) throw ParseError("at most two equations are supported", peek().pos);
        expect_ident("over");
        const Token& gf_tok = peek();
        expect_ident("GF");
        expect(Tok::LParen, "'('");
        const Token& num = peek();
        expect(Tok::Int, "field size");
        expect(Tok::RParen, "')'");
        if (peek().kind != Tok::End) throw ParseError("trailing input", peek().pos);

        unsigned long p = std::stoul(num.text);
        if (p > 1000 || !is_prime(p) || p == 2) throw ParseError("GF(" + num.text + ") is not an odd prime field of size <= 1000", gf_tok.pos);

        if (eqs.size() == 2 && eqs[0].first == eqs[1].first)
            throw ParseError("equations must use distinct left-hand variables", eq_pos[1]);

        CurveSpec spec;
        try {
            if (eqs.size() == 1) {
                spec = make_hyperelliptic(eqs[0].second, static_cast<unsigned>(p), eqs[0].first);
            } else {
                spec = make_fiber_product(eqs[0].second, eqs[1].second, static_cast<unsigned>(p));
                spec.f_var = eqs[0].first;
                spec.g_var = eqs[1].first;
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), eq_pos.front());
        }
        return spec;
    }

   private:
    const Token& peek() const { return toks_[idx_]; }
    const Token& advance() { return toks_[idx_++]; }

    void expect(Tok k, const char* what) {
        if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
        advance();
    }

    void expect_ident(const char* word) {
        if (peek().kind != Tok::Ident || peek().text != word) throw ParseError(std::string("expected '") + word + "'", peek().pos);
        advance();
    }

    std::pair<char, IntPolynomial> equation() {
        const Token& var = peek();
        if (var.kind != Tok::Ident || var.text.size() != 1) throw ParseError("expected a single-letter variable", var.pos);
        if (var.text == "x") throw ParseError("the left-hand variable must differ from x", var.pos);
        advance();
        expect(Tok::Caret, "'^2'");
        const Token& two = peek();
        if (two.kind != Tok::Int || two.text != "2") throw ParseError("only squared left-hand sides are supported", two.pos);
        advance();
        expect(Tok::Equals, "'='");
        return {var.text[0], polynomial()};
    }

    IntPolynomial polynomial() {
        IntPolynomial acc;
        bool first = true;
        while (true) {
            int sign = 1;
            if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
                sign = peek().kind == Tok::Minus ? -1 : 1;
                advance();
            } else if (!first) {
                break;
            }
            acc += term() * Integer(sign);
            first = false;
            Tok k = peek().kind;
            if (k == Tok::Int || k == Tok::LParen || (k == Tok::Ident && peek().text == "x"))
                throw ParseError("implicit multiplication is not allowed", peek().pos);
            if (k != Tok::Plus && k != Tok::Minus) break;
        }
        return acc;
    }

    IntPolynomial term() {
        IntPolynomial t = factor();
        while (peek().kind == Tok::Star) {
            advance();
            t *= factor();
        }
        return t;
    }

    IntPolynomial factor() {
        const Token& tok = peek();
        if (tok.kind == Tok::Int) {
            advance();
            return IntPolynomial::constant(Integer(tok.text));
        }
        if (tok.kind == Tok::Ident && tok.text == "x") {
            advance();
            unsigned long e = 1;
            if (peek().kind == Tok::Caret) {
                advance();
                const Token& ex = peek();
                expect(Tok::Int, "exponent");
                if (ex.text.size() > 3) throw ParseError("exponent too large", ex.pos);
                e = std::stoul(ex.text);
            }
            return IntPolynomial::monomial(Integer(1), e);
        }
        if (tok.kind == Tok::Ident) throw ParseError("unknown symbol '" + tok.text + "'; right-hand sides are polynomials in x", tok.pos);
        throw ParseError("expected an integer or a power of x", tok.pos);
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
};

}  // namespace

CurveSpec parse_curve(std::string_view text) { return Parser(text).parse(); }

// --------------------------------------------------------------- counting

namespace {

/// chi(x) for every element of F_{p^n}, indexed by enumeration position.
std::vector<std::int8_t> character_table(const FieldDescriptor& F) {
    std::vector<std::int8_t> chi(F.enumerable_size(), -1);
    for (const auto& x : F.elements()) chi[F.index_of(F.mul(x, x))] = 1;
    chi[0] = 0;
    return chi;
}

bool leading_is_square(const IntPolynomial& f, unsigned p, unsigned n) {
    if (n % 2 == 0) return true;
    auto F = field(p, 1);
    return F.quadratic_character(F.from_integer(f.leading())) == 1;
}

unsigned hyperelliptic_infinity(const IntPolynomial& f, unsigned p, unsigned n) {
    if (f.degree() % 2 != 0) return 1;
    return leading_is_square(f, p, n) ? 2 : 0;
}

std::uint64_t count_with_table(const IntPolynomial& f, unsigned p, const FieldDescriptor& F, const std::vector<std::int8_t>& chi, unsigned n) {
    std::int64_t sum = 0;
    std::vector<FieldElement> coeffs;
    for (const auto& c : f.coeffs()) coeffs.push_back(F.from_integer(c));
    for (const auto& x : F.elements()) {
        FieldElement acc;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), coeffs[i]);
        sum += 1 + chi[F.index_of(acc)];
    }
    return static_cast<std::uint64_t>(sum) + hyperelliptic_infinity(f, p, n);
}

}  // namespace

std::uint64_t hyperelliptic_count(const CurveSpec& spec, unsigned n) {
    if (spec.kind != CurveKind::HyperellipticForm) throw std::invalid_argument("hyperelliptic_count needs y^2 = f(x)");
    auto F = field(spec.p, n);
    return count_with_table(spec.f, spec.p, F, character_table(F), n);
}

unsigned points_at_infinity(const CurveSpec& spec, unsigned n) {
    if (spec.kind == CurveKind::HyperellipticForm) return hyperelliptic_infinity(spec.f, spec.p, n);
    // Local type of x = infinity in each quadratic subcover: ramified (odd
    // degree), split or inert (even degree, leading coefficient square or not).
    // Tame inertia is cyclic, so at most one order-2 inertia group occurs.
    enum class Local { Ramified, Split, Inert };
    auto type = [&](const IntPolynomial& h) {
        if (h.degree() % 2 != 0) return Local::Ramified;
        return leading_is_square(h, spec.p, n) ? Local::Split : Local::Inert;
    };
    std::array<Local, 3> t{type(spec.f), type(spec.g), type(reduce_mod(spec.f * spec.g, spec.p))};
    int ramified = 0;
    int split = 0;
    for (auto x : t) {
        ramified += x == Local::Ramified;
        split += x == Local::Split;
    }
    if (ramified == 0) return split == 3 ? 4 : 0;
    return split == 1 ? 2 : 0;
}

FiberCounts fiber_point_counts(const CurveSpec& spec, unsigned depth) {
    if (spec.kind != CurveKind::FiberProduct) throw std::invalid_argument("fiber_point_counts needs a fiber product");
    auto subs = quadratic_subcovers(spec);
    FiberCounts out;
    out.counts.q = spec.p;
    for (unsigned n = 1; n <= depth; ++n) {
        auto F = field(spec.p, n);
        auto chi = character_table(F);
        std::vector<FieldElement> fc, gc;
        for (const auto& c : spec.f.coeffs()) fc.push_back(F.from_integer(c));
        for (const auto& c : spec.g.coeffs()) gc.push_back(F.from_integer(c));
        // The character is multiplicative, so w^2 = f g needs no evaluation of its own.
        std::int64_t sum = 0;
        for (const auto& x : F.elements()) {
            FieldElement a, b;
            for (std::size_t i = fc.size(); i-- > 0;) a = F.add(F.mul(a, x), fc[i]);
            for (std::size_t i = gc.size(); i-- > 0;) b = F.add(F.mul(b, x), gc[i]);
            int ca = chi[F.index_of(a)], cb = chi[F.index_of(b)];
            sum += 3 + ca + cb + ca * cb;
        }
        Integer total = Integer(static_cast<long>(sum));
        for (const auto& s : subs) total += hyperelliptic_infinity(s.f, s.p, n);
        total -= 2 * (F.order() + 1);
        out.counts.counts.push_back(total);
    }
    for (std::size_t i = 0; i < 3; ++i) out.subcover_genera[i] = subs[i].genus();
    out.genus = out.subcover_genera[0] + out.subcover_genera[1] + out.subcover_genera[2];
    return out;
}

PointCountVector point_counts(const CurveSpec& spec, unsigned depth) {
    if (spec.kind == CurveKind::FiberProduct) return fiber_point_counts(spec, depth).counts;
    PointCountVector out;
    out.q = spec.p;
    for (unsigned n = 1; n <= depth; ++n) out.counts.emplace_back(static_cast<unsigned long>(hyperelliptic_count(spec, n)));
    return out;
}

std::uint64_t affine_system_count(const CurveSpec& spec, unsigned n) {
    if (spec.kind != CurveKind::FiberProduct) throw std::invalid_argument("affine_system_count needs a fiber product");
    // Revalidate: a hand-built spec may carry a constant g.
    (void)make_fiber_product(spec.f, spec.g, spec.p);
    auto F = field(spec.p, n);
    std::vector<FieldElement> squares;
    for (const auto& y : F.elements()) squares.push_back(F.mul(y, y));
    std::uint64_t total = 0;
    for (const auto& x : F.elements()) {
        FieldElement fx = F.eval(spec.f, x);
        FieldElement gx = F.eval(spec.g, x);
        std::uint64_t ys = 0;
        std::uint64_t zs = 0;
        for (const auto& s : squares) {
            ys += s == fx;
            zs += s == gx;
        }
        total += ys * zs;
    }
    return total;
}

// -------------------------------------------------------------- elliptic

std::vector<EllipticEntry> enumerate_elliptic(unsigned q, EllipticFamily family) {
    std::vector<EllipticEntry> out;
    const unsigned a_max = family == EllipticFamily::J0 ? 1 : q;
    for (unsigned a = 0; a < a_max; ++a) {
        for (unsigned b = 0; b < q; ++b) {
            std::uint64_t disc = (4ULL * a * a * a + 27ULL * b * b) % q;
            if (disc == 0) continue;
            EllipticEntry e;
            e.curve = make_hyperelliptic(IntPolynomial{static_cast<long>(b), static_cast<long>(a), 0, 1}, q);
            e.a = a;
            e.b = b;
            e.points = hyperelliptic_count(e.curve, 1);
            out.push_back(std::move(e));
        }
    }
    return out;
}

std::vector<std::vector<EllipticEntry>> elliptic_isomorphism_classes(const std::vector<EllipticEntry>& entries, unsigned q) {
    std::map<std::pair<unsigned, unsigned>, std::size_t> rep;  // (a, b) -> class index
    std::vector<std::vector<EllipticEntry>> classes;
    for (const auto& e : entries) {
        std::optional<std::size_t> found;
        for (unsigned u = 1; u < q && !found; ++u) {
            std::uint64_t u2 = static_cast<std::uint64_t>(u) * u % q;
            std::uint64_t u4 = u2 * u2 % q;
            std::uint64_t u6 = u4 * u2 % q;
            auto key = std::make_pair(static_cast<unsigned>(u4 * e.a % q), static_cast<unsigned>(u6 * e.b % q));
            auto it = rep.find(key);
            if (it != rep.end()) found = it->second;
        }
        if (!found) {
            found = classes.size();
            classes.emplace_back();
        }
        rep[{e.a, e.b}] = *found;
        classes[*found].push_back(e);
    }
    for (auto& c : classes) std::sort(c.begin(), c.end(), [](const auto& x, const auto& y) { return std::pair(x.a, x.b) < std::pair(y.a, y.b); });
    std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) { return std::pair(x[0].a, x[0].b) < std::pair(y[0].a, y[0].b); });
    return classes;
}

}  // namespace curvebound
