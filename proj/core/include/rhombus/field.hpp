#pragma once

#include <array>
#include <string>

#include "rhombus/rational.hpp"

namespace rhombus {

// Element of Q(sqrt3, sqrt11) over the basis {1, sqrt3, sqrt11, sqrt33}.
// Coefficients are always reduced rationals, so equality is componentwise.
struct FieldElement {
    Rational c1, c3, c11, c33;

    FieldElement() = default;
    FieldElement(Rational r1, Rational r3, Rational r11, Rational r33)
        : c1(std::move(r1)), c3(std::move(r3)), c11(std::move(r11)), c33(std::move(r33)) {}

    static FieldElement from_rational(const Rational& q) { return {q, 0, 0, 0}; }
    static FieldElement from_int(long n) { return {Rational(n), 0, 0, 0}; }
    static FieldElement sqrt3() { return {0, 1, 0, 0}; }
    static FieldElement sqrt11() { return {0, 0, 1, 0}; }
    static FieldElement sqrt33() { return {0, 0, 0, 1}; }

    bool is_zero() const { return c1 == 0 && c3 == 0 && c11 == 0 && c33 == 0; }
    bool is_rational() const { return c3 == 0 && c11 == 0 && c33 == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.c1 == b.c1 && a.c3 == b.c3 && a.c11 == b.c11 && a.c33 == b.c33;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const Rational& q, const FieldElement& a);

/// Exact multiplicative inverse. Throws DivisionByZeroError when x == 0.
FieldElement inverse(const FieldElement& x);

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * inverse(b); }

/// Advisory numeric value; never consulted by any constraint decision.
double to_double(const FieldElement& x);

/// Canonical (non-numeric) ordering on coefficient tuples, used for dedup keys.
int compare(const FieldElement& a, const FieldElement& b);

std::string to_string(const FieldElement& x);

}  // namespace rhombus
