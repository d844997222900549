#ifndef CURVEBOUND_GFARITH_HPP
#define CURVEBOUND_GFARITH_HPP

#include <array>
#include <cstdint>
#include <iterator>
#include <vector>

#include "curvebound/exactalg.hpp"

namespace curvebound {

inline constexpr unsigned kMaxExtensionDegree = 8;
inline constexpr std::uint64_t kEnumerationCap = 10'000'000;

/// Element of F_{p^n}: coefficients of a polynomial of degree < n over F_p,
/// reduced modulo the field's defining polynomial. Unused slots stay zero.
struct FieldElement {
    std::array<std::uint32_t, kMaxExtensionDegree> c{};

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

class FieldDescriptor;

/// Iterates over every element of a field, in lexicographic coefficient order
/// (c_0 most significant, then c_1, ...).
class ElementRange {
   public:
    class iterator {
       public:
        using iterator_category = std::input_iterator_tag;
        using value_type = FieldElement;
        using difference_type = std::ptrdiff_t;
        using pointer = const FieldElement*;
        using reference = const FieldElement&;

        iterator() = default;
        iterator(const FieldDescriptor* field, std::uint64_t index);
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        iterator operator++(int) {
            iterator tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

       private:
        const FieldDescriptor* field_ = nullptr;
        std::uint64_t index_ = 0;
        FieldElement current_{};
    };

    explicit ElementRange(const FieldDescriptor& field);
    iterator begin() const;
    iterator end() const;

   private:
    const FieldDescriptor* field_;
    std::uint64_t size_;
};

/// F_{p^n} = F_p[t] / (modulus). The modulus is the lexicographically smallest
/// monic irreducible of degree n (coefficients compared from t^0 upward),
/// except that n = 1 uses t.
class FieldDescriptor {
   public:
    FieldDescriptor(unsigned p, unsigned n);

    unsigned p() const noexcept { return p_; }
    unsigned n() const noexcept { return n_; }
    /// Monic modulus, low-to-high coefficients, length n + 1.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    /// p^n, exact.
    Integer order() const;
    /// p^n when it is at most kEnumerationCap; throws std::length_error otherwise.
    std::uint64_t enumerable_size() const;

    FieldElement zero() const { return {}; }
    FieldElement one() const { return from_integer(1); }
    FieldElement from_integer(long v) const;
    FieldElement from_integer(const Integer& v) const;
    /// Element with the given position in enumeration order.
    FieldElement from_index(std::uint64_t index) const;
    std::uint64_t index_of(const FieldElement& x) const;

    FieldElement add(const FieldElement& x, const FieldElement& y) const;
    FieldElement sub(const FieldElement& x, const FieldElement& y) const;
    FieldElement neg(const FieldElement& x) const;
    FieldElement mul(const FieldElement& x, const FieldElement& y) const;
    FieldElement pow(const FieldElement& x, const Integer& e) const;
    FieldElement frobenius(const FieldElement& x) const;
    bool is_zero(const FieldElement& x) const { return x == FieldElement{}; }

    /// Value of an integer polynomial (coefficients reduced mod p) at x.
    FieldElement eval(const IntPolynomial& f, const FieldElement& x) const;

    /// x^((p^n - 1)/2): 0 for zero, +1 for nonzero squares, -1 otherwise.
    int quadratic_character(const FieldElement& x) const;

    ElementRange elements() const { return ElementRange(*this); }

    friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.modulus_ == b.modulus_;
    }

   private:
    unsigned p_;
    unsigned n_;
    std::vector<std::uint32_t> modulus_;
};

/// Validated, deterministic descriptor for F_{p^n}; p an odd prime <= 1000,
/// 1 <= n <= 8.
FieldDescriptor field(unsigned p, unsigned n);

bool is_prime(unsigned long n);

namespace gf {

/// Dense polynomial over F_p, low-to-high, trimmed.
using PrimePoly = std::vector<std::uint32_t>;

PrimePoly reduce(const IntPolynomial& f, unsigned p);
PrimePoly derivative(const PrimePoly& f, unsigned p);
PrimePoly gcd(PrimePoly a, PrimePoly b, unsigned p);
bool is_squarefree(const PrimePoly& f, unsigned p);
/// Rabin-style test: no factor of degree <= n/2 (gcd with t^(p^k) - t).
bool is_irreducible(const PrimePoly& f, unsigned p);

}  // namespace gf

}  // namespace curvebound

#endif
