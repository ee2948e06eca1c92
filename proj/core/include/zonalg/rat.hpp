#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <iosfwd>
#include <string>

#include "zonalg/errors.hpp"

namespace zonalg {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Invariant: lowest terms, denominator > 0.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long long n) : v_(static_cast<Int>(n)) {}
    Rat(const Int& n) : v_(n) {}
    Rat(const Int& num, const Int& den);

    const Int num() const { return boost::multiprecision::numerator(v_); }
    const Int den() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return den() == 1; }
    int sign() const { return v_.sign(); }
    Rat abs() const { return sign() < 0 ? Rat(-v_) : *this; }
    Int floor() const;
    Int ceil() const;

    std::string str() const;
    static Rat parse(const std::string& text);

    Rat operator-() const { return Rat(-v_); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    explicit Rat(const boost::multiprecision::cpp_rational& v) : v_(v) {}
    boost::multiprecision::cpp_rational v_;
};

Rat factorial_rat(unsigned k);
Int factorial_int(unsigned k);

}  // namespace zonalg

template <>
struct std::hash<zonalg::Rat> {
    std::size_t operator()(const zonalg::Rat& r) const {
        return std::hash<std::string>{}(r.str());
    }
};
