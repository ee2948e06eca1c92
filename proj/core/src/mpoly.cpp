#include "zonalg/mpoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "zonalg/errors.hpp"

namespace zonalg {

int total_degree(const Expo& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

Rat multi_factorial(const Expo& e) {
    Rat f(1);
    for (int x : e) f *= factorial_rat(static_cast<unsigned>(x));
    return f;
}

bool MonoOrder::operator()(const Expo& a, const Expo& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

std::vector<Expo> monomials_of_degree(std::size_t n, int d) {
    std::vector<Expo> out;
    Expo cur(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
        if (i + 1 == n) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            cur[i] = k;
            rec(i + 1, rem - k);
        }
    };
    if (n == 0) return out;
    rec(0, d);
    return out;
}

std::vector<Expo> monomials_up_to_degree(std::size_t n, int d) {
    std::vector<Expo> out;
    for (int j = 0; j <= d; ++j) {
        auto m = monomials_of_degree(n, j);
        out.insert(out.end(), m.begin(), m.end());
    }
    return out;
}

MPoly MPoly::constant(std::size_t n, const Rat& c) {
    MPoly p(n);
    p.set_coeff(Expo(n, 0), c);
    return p;
}

MPoly MPoly::variable(std::size_t n, std::size_t i) {
    if (i >= n) throw BadIndex("variable index");
    MPoly p(n);
    Expo e(n, 0);
    e[i] = 1;
    p.set_coeff(e, Rat(1));
    return p;
}

MPoly MPoly::monomial(std::size_t n, const Expo& e) {
    if (e.size() != n) throw DimensionMismatch("monomial exponent length");
    MPoly p(n);
    p.set_coeff(e, Rat(1));
    return p;
}

MPoly MPoly::linear_form(const RatVec& a) {
    MPoly p(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Expo e(a.size(), 0);
        e[i] = 1;
        p.set_coeff(e, a[i]);
    }
    return p;
}

MPoly MPoly::linear_form(const IntVec& a) { return linear_form(to_rat_vec(a)); }

int MPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

bool MPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int de = total_degree(e);
        if (d == -1)
            d = de;
        else if (d != de)
            return false;
    }
    return true;
}

const Rat MPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::set_coeff(const Expo& e, const Rat& c) {
    if (e.size() != n_) throw DimensionMismatch("exponent arity");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

MPoly MPoly::operator-() const {
    MPoly p(n_);
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (n_ != o.n_) throw DimensionMismatch("polynomial arity");
    for (const auto& [e, c] : o.terms_) {
        Rat s = coeff(e) + c;
        set_coeff(e, s);
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (n_ != o.n_) throw DimensionMismatch("polynomial arity");
    for (const auto& [e, c] : o.terms_) {
        Rat s = coeff(e) - c;
        set_coeff(e, s);
    }
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("polynomial arity");
    MPoly p(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Expo e(a.n_);
            for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            Rat s = p.coeff(e) + ca * cb;
            p.set_coeff(e, s);
        }
    }
    return p;
}

MPoly& MPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly acc = MPoly::constant(n_, Rat(1));
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

MPoly MPoly::homogeneous_component(int d) const {
    MPoly p(n_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) p.terms_[e] = c;
    return p;
}

MPoly MPoly::least() const {
    if (terms_.empty()) return MPoly(n_);
    return homogeneous_component(total_degree(terms_.begin()->first));
}

MPoly MPoly::most() const {
    if (terms_.empty()) return MPoly(n_);
    return homogeneous_component(degree());
}

Rat MPoly::eval(const RatVec& point) const {
    if (point.size() != n_) throw DimensionMismatch("evaluation point arity");
    Rat acc;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < n_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string MPoly::render() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            os << a.str();
        else if (a == Rat(1))
            os << mono;
        else
            os << a.str() << "*" << mono;
    }
    return os.str();
}

MPoly diff_apply(const MPoly& q, const MPoly& p) {
    if (q.vars() != p.vars()) throw DimensionMismatch("polynomial arity");
    const std::size_t n = p.vars();
    MPoly out(n);
    for (const auto& [g, cg] : q.terms()) {
        for (const auto& [e, ce] : p.terms()) {
            Expo r(n);
            bool ok = true;
            Rat fall(1);
            for (std::size_t i = 0; i < n && ok; ++i) {
                if (e[i] < g[i]) {
                    ok = false;
                    break;
                }
                r[i] = e[i] - g[i];
                for (int k = e[i]; k > r[i]; --k) fall *= Rat(k);
            }
            if (!ok) continue;
            Rat s = out.coeff(r) + cg * ce * fall;
            out.set_coeff(r, s);
        }
    }
    return out;
}

Rat pairing(const MPoly& p, const MPoly& q) {
    if (p.vars() != q.vars()) throw DimensionMismatch("polynomial arity");
    Rat acc;
    for (const auto& [e, c] : p.terms()) {
        Rat qc = q.coeff(e);
        if (qc.is_zero()) continue;
        Rat f(1);
        for (int x : e) f *= factorial_rat(static_cast<unsigned>(x));
        acc += c * qc * f;
    }
    return acc;
}

MPoly p_of(const GroundSet& X, const std::vector<int>& Y) {
    MPoly acc = MPoly::constant(X.dim(), Rat(1));
    for (int i : Y) acc = acc * MPoly::linear_form(X.col(static_cast<std::size_t>(i)));
    return acc;
}

RatVec coeff_row(const MPoly& p, const std::vector<Expo>& monos) {
    RatVec row(monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j) row[j] = p.coeff(monos[j]);
    return row;
}

MPoly from_coeff_row(std::size_t n, const std::vector<Expo>& monos, const RatVec& row) {
    MPoly p(n);
    for (std::size_t j = 0; j < monos.size(); ++j)
        if (!row[j].is_zero()) p.set_coeff(monos[j], row[j]);
    return p;
}

TruncatedSeries TruncatedSeries::exponential(const RatVec& alpha, int cap) {
    TruncatedSeries f(alpha.size(), cap);
    for (const Expo& e : monomials_up_to_degree(alpha.size(), cap)) {
        Rat c(1);
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) c *= alpha[i];
            c /= factorial_rat(static_cast<unsigned>(e[i]));
        }
        if (!c.is_zero()) f.c_[e] = c;
    }
    return f;
}

const Rat TruncatedSeries::coeff(const Expo& e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Rat(0) : it->second;
}

void TruncatedSeries::set_coeff(const Expo& e, const Rat& c) {
    if (e.size() != n_ || total_degree(e) > cap_) throw DimensionMismatch("series coefficient");
    if (c.is_zero())
        c_.erase(e);
    else
        c_[e] = c;
}

Rat pairing(const MPoly& p, const TruncatedSeries& f) {
    if (p.vars() != f.vars()) throw DimensionMismatch("arity");
    if (p.degree() > f.cap()) throw TruncationTooLow("pairing beyond series cap");
    Rat acc;
    for (const auto& [e, c] : p.terms()) {
        Rat fc = f.coeff(e);
        if (fc.is_zero()) continue;
        Rat fac(1);
        for (int x : e) fac *= factorial_rat(static_cast<unsigned>(x));
        acc += c * fc * fac;
    }
    return acc;
}

}  // namespace zonalg
