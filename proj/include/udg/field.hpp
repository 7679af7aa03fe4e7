#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace udg {

using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/**
 * An element a + b√3 + c√11 + d√33 of the real field Q(√3,√11).
 *
 * The basis {1, √3, √11, √33} is linearly independent over Q, so the
 * representation is unique and equality is component-wise. All arithmetic
 * is exact; there is no floating point anywhere in a decision path.
 */
struct FieldElem {
    Rat a, b, c, d;

    FieldElem() = default;
    FieldElem(Rat a_, Rat b_ = 0, Rat c_ = 0, Rat d_ = 0)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}
    FieldElem(long v) : a(v), b(0), c(0), d(0) {}
    FieldElem(int v) : a(v), b(0), c(0), d(0) {}

    bool operator==(const FieldElem&) const = default;

    bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
    bool is_rational() const { return b == 0 && c == 0 && d == 0; }

    FieldElem operator-() const { return {-a, -b, -c, -d}; }
    FieldElem operator+(const FieldElem& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    FieldElem operator-(const FieldElem& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

    // Closure under multiplication: √3·√11 = √33, √3·√33 = 3√11, √11·√33 = 11√3.
    FieldElem operator*(const FieldElem& o) const {
        return {a * o.a + 3 * b * o.b + 11 * c * o.c + 33 * d * o.d,
                a * o.b + b * o.a + 11 * (c * o.d + d * o.c),
                a * o.c + c * o.a + 3 * (b * o.d + d * o.b),
                a * o.d + d * o.a + b * o.c + c * o.b};
    }

    FieldElem& operator+=(const FieldElem& o) { *this = *this + o; return *this; }
    FieldElem& operator-=(const FieldElem& o) { *this = *this - o; return *this; }
    FieldElem& operator*=(const FieldElem& o) { *this = *this * o; return *this; }

    /// Conjugation √3 → −√3 (fixes √11).
    FieldElem conj_sqrt3() const { return {a, -b, c, -d}; }
    /// Conjugation √11 → −√11 (fixes √3).
    FieldElem conj_sqrt11() const { return {a, b, -c, -d}; }

    static const FieldElem& zero();
    static const FieldElem& one();
};

/// Multiplicative inverse, by rationalizing through the two conjugations.
/// Throws std::domain_error on zero.
FieldElem inverse(const FieldElem& x);

inline FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * inverse(y); }

/// Exact sign of the real number x: -1, 0 or +1. Decided by recursive
/// case analysis over the tower Q ⊂ Q(√3) ⊂ Q(√3)(√11); no floats.
int sign(const FieldElem& x);

/// Comparisons in the real embedding.
inline bool operator<(const FieldElem& x, const FieldElem& y) { return sign(x - y) < 0; }
inline bool operator<=(const FieldElem& x, const FieldElem& y) { return sign(x - y) <= 0; }
inline bool operator>(const FieldElem& x, const FieldElem& y) { return sign(x - y) > 0; }
inline bool operator>=(const FieldElem& x, const FieldElem& y) { return sign(x - y) >= 0; }

/// The nonnegative square root of x within Q(√3,√11), or nullopt when no
/// square root exists in the field (a legitimate outcome, not a failure).
/// Throws std::domain_error when sign(x) < 0.
/// Works down the tower: a root of P + Q√11 has the form U + V√11 with
/// U, V in Q(√3), which reduces to square roots in Q(√3) and then in Q.
std::optional<FieldElem> sqrt(const FieldElem& x);

/// Double image of x. Diagnostics and SVG layout only, never decisions.
double to_double(const FieldElem& x);

/// Lexicographic order on (a, b, c, d); the canonical total order used for
/// vertex sorting. Not the real-number order.
int lex_compare(const FieldElem& x, const FieldElem& y);

/// Renders "(a, b, c, d)" with integer or "p/q" components.
std::string to_string(const FieldElem& x);
std::ostream& operator<<(std::ostream& os, const FieldElem& x);

/// Parses the "(a, b, c, d)" notation; accepts arbitrary interior
/// whitespace. Throws std::invalid_argument with a description on bad input.
FieldElem parse_field_elem(std::string_view text);

/// Parses a single rational "p/q" or integer "p".
Rat parse_rat(std::string_view text);
std::string rat_to_string(const Rat& r);

}  // namespace udg
