#include "rhombus/field.hpp"

#include <cmath>
#include <sstream>

#include "rhombus/error.hpp"

namespace rhombus {

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.c1 + b.c1, a.c3 + b.c3, a.c11 + b.c11, a.c33 + b.c33};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.c1 - b.c1, a.c3 - b.c3, a.c11 - b.c11, a.c33 - b.c33};
}

FieldElement operator-(const FieldElement& a) { return {-a.c1, -a.c3, -a.c11, -a.c33}; }

// Basis products: sqrt3*sqrt11 = sqrt33, sqrt3*sqrt33 = 3*sqrt11,
// sqrt11*sqrt33 = 11*sqrt3, sqrt3^2 = 3, sqrt11^2 = 11, sqrt33^2 = 33.
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    FieldElement r;
    r.c1 = a.c1 * b.c1 + 3 * a.c3 * b.c3 + 11 * a.c11 * b.c11 + 33 * a.c33 * b.c33;
    r.c3 = a.c1 * b.c3 + a.c3 * b.c1 + 11 * (a.c11 * b.c33 + a.c33 * b.c11);
    r.c11 = a.c1 * b.c11 + a.c11 * b.c1 + 3 * (a.c3 * b.c33 + a.c33 * b.c3);
    r.c33 = a.c1 * b.c33 + a.c33 * b.c1 + a.c3 * b.c11 + a.c11 * b.c3;
    return r;
}

FieldElement operator*(const Rational& q, const FieldElement& a) {
    return {q * a.c1, q * a.c3, q * a.c11, q * a.c33};
}

namespace {

FieldElement conj3(const FieldElement& x) { return {x.c1, -x.c3, x.c11, -x.c33}; }
FieldElement conj11(const FieldElement& x) { return {x.c1, x.c3, -x.c11, -x.c33}; }
FieldElement conj_both(const FieldElement& x) { return {x.c1, -x.c3, -x.c11, x.c33}; }

}  // namespace

FieldElement inverse(const FieldElement& x) {
    if (x.is_zero()) throw DivisionByZeroError();
    // Multiply by the three Galois conjugates; the product x * y is the field
    // norm, a nonzero rational, so the division is a scalar one.
    const FieldElement y = conj3(x) * conj11(x) * conj_both(x);
    const FieldElement norm = x * y;
    if (!norm.is_rational() || norm.c1 == 0)
        throw Error("field norm failed to collapse to a nonzero rational");
    const Rational inv_norm = make_rational(norm.c1.get_den(), norm.c1.get_num());
    return inv_norm * y;
}

double to_double(const FieldElement& x) {
    static const double s3 = std::sqrt(3.0);
    static const double s11 = std::sqrt(11.0);
    static const double s33 = std::sqrt(33.0);
    return x.c1.get_d() + x.c3.get_d() * s3 + x.c11.get_d() * s11 + x.c33.get_d() * s33;
}

int compare(const FieldElement& a, const FieldElement& b) {
    if (int c = compare(a.c1, b.c1); c != 0) return c;
    if (int c = compare(a.c3, b.c3); c != 0) return c;
    if (int c = compare(a.c11, b.c11); c != 0) return c;
    return compare(a.c33, b.c33);
}

std::string to_string(const FieldElement& x) {
    std::ostringstream os;
    os << format_rational(x.c1) << " " << format_rational(x.c3) << " " << format_rational(x.c11)
       << " " << format_rational(x.c33);
    return os.str();
}

}  // namespace rhombus
