#include "zonalg/rat.hpp"

#include <ostream>

namespace zonalg {

Rat::Rat(const Int& num, const Int& den) {
    if (den.is_zero()) throw ZeroDenominator();
    Int n = num, d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    v_ = boost::multiprecision::cpp_rational(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw ZeroDenominator();
    v_ /= o.v_;
    return *this;
}

Int Rat::floor() const {
    Int n = num(), d = den();
    Int q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

Int Rat::ceil() const {
    Int n = num(), d = den();
    Int q = n / d;
    if (n > 0 && q * d != n) ++q;
    return q;
}

std::string Rat::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int n(text.substr(0, slash));
        Int d(text.substr(slash + 1));
        if (d.is_zero()) throw ZeroDenominator();
        return Rat(n, d);
    } catch (const std::runtime_error&) {
        throw ParseError("bad rational literal: " + text);
    }
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Int factorial_int(unsigned k) {
    Int f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

Rat factorial_rat(unsigned k) { return Rat(factorial_int(k)); }

}  // namespace zonalg
