#include "rhombus/rational.hpp"

#include "rhombus/error.hpp"

namespace rhombus {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZeroError();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

Rational parse_rational(std::string_view token) {
    std::string s(token);
    if (!s.empty() && s[0] == '+') s.erase(0, 1);  // GMP rejects a leading '+'
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational q(BigInt(s), 1);
            q.canonicalize();
            return q;
        }
        const BigInt num(s.substr(0, slash));
        const BigInt den(s.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational token '" + s + "'");
    }
}

std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace rhombus
