#pragma once
#include <map>
#include <string>
#include <vector>

#include "zonalg/groundset.hpp"
#include "zonalg/matrix.hpp"

namespace zonalg {

using Expo = std::vector<int>;

int total_degree(const Expo& e);
Rat multi_factorial(const Expo& e);  // product of per-variable factorials

// Canonical monomial precedence: total degree ascending, then exponent
// vectors lexicographically descending, so within one degree the power of
// the first variable drops last.
struct MonoOrder {
    bool operator()(const Expo& a, const Expo& b) const;
};

// Monomials of one degree in canonical precedence.
std::vector<Expo> monomials_of_degree(std::size_t n, int d);
std::vector<Expo> monomials_up_to_degree(std::size_t n, int d);

class MPoly {
public:
    explicit MPoly(std::size_t n = 0) : n_(n) {}
    static MPoly constant(std::size_t n, const Rat& c);
    static MPoly variable(std::size_t n, std::size_t i);
    static MPoly monomial(std::size_t n, const Expo& e);
    static MPoly linear_form(const RatVec& a);
    static MPoly linear_form(const IntVec& a);

    std::size_t vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    bool is_homogeneous() const;

    const Rat coeff(const Expo& e) const;
    void set_coeff(const Expo& e, const Rat& c);
    const std::map<Expo, Rat, MonoOrder>& terms() const { return terms_; }

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const Rat& c);
    friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
    MPoly pow(unsigned k) const;
    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    MPoly homogeneous_component(int d) const;
    MPoly least() const;
    MPoly most() const;

    Rat eval(const RatVec& point) const;
    std::string render() const;

private:
    std::size_t n_;
    std::map<Expo, Rat, MonoOrder> terms_;
};

// q(D) applied to p: each term of q acts as a monomial derivative.
MPoly diff_apply(const MPoly& q, const MPoly& p);

// Apolarity pairing <p, q> = (p(D)q)(0) = sum over monomials of b! p_b q_b.
Rat pairing(const MPoly& p, const MPoly& q);

// Product of the linear forms attached to the columns in Y.
MPoly p_of(const GroundSet& X, const std::vector<int>& Y);

// Coefficient row of a homogeneous-degree slice in canonical monomial order.
RatVec coeff_row(const MPoly& p, const std::vector<Expo>& monos);
MPoly from_coeff_row(std::size_t n, const std::vector<Expo>& monos, const RatVec& row);

// Power series truncated at total degree cap, held as raw coefficients:
// f = sum c_b t^b over |b| <= cap.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t n, int cap) : n_(n), cap_(cap) {}
    // Exponential at alpha: c_b = alpha^b / b!.
    static TruncatedSeries exponential(const RatVec& alpha, int cap);

    std::size_t vars() const { return n_; }
    int cap() const { return cap_; }
    const Rat coeff(const Expo& e) const;
    void set_coeff(const Expo& e, const Rat& c);

private:
    std::size_t n_;
    int cap_;
    std::map<Expo, Rat, MonoOrder> c_;
};

// <p, f> = sum b! p_b c_b; requires deg p <= cap of f.
Rat pairing(const MPoly& p, const TruncatedSeries& f);

}  // namespace zonalg
