#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <zonalg/errors.hpp>
#include <zonalg/mpoly.hpp>

#include "configs.hpp"

using namespace zonalg;

namespace {

MPoly t(std::size_t i) { return MPoly::variable(2, i); }

}  // namespace

TEST_CASE("monomial enumeration follows the canonical order") {
    CHECK(monomials_of_degree(2, 2) == std::vector<Expo>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(monomials_of_degree(3, 1) == std::vector<Expo>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(monomials_up_to_degree(2, 1) == std::vector<Expo>{{0, 0}, {1, 0}, {0, 1}});
    CHECK(monomials_of_degree(2, 0) == std::vector<Expo>{{0, 0}});
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(total_degree({2, 0, 3}) == 5);
    CHECK(multi_factorial({3, 2}) == Rat(12));
}

TEST_CASE("polynomial construction and degree bookkeeping") {
    MPoly zero(2);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    MPoly c = MPoly::constant(2, Rat(5));
    CHECK(c.degree() == 0);
    CHECK(c.is_homogeneous());
    MPoly p = t(0) * t(0) + t(1);
    CHECK(p.degree() == 2);
    CHECK(!p.is_homogeneous());
    CHECK(p.coeff({2, 0}) == Rat(1));
    CHECK(p.coeff({0, 1}) == Rat(1));
    CHECK(p.coeff({1, 1}) == Rat(0));
    CHECK_THROWS_AS(MPoly::monomial(2, {1, 2, 3}), DimensionMismatch);
}

TEST_CASE("arithmetic is exact and cancels cleanly") {
    MPoly a = MPoly::linear_form(IntVec{1, -1});
    MPoly b = MPoly::linear_form(IntVec{1, 1});
    CHECK(a * b == t(0) * t(0) - t(1) * t(1));
    CHECK((a + b) == t(0) * Rat(2));
    CHECK((a - a).is_zero());
    MPoly sq = a.pow(2);
    CHECK(sq == t(0) * t(0) - t(0) * t(1) * Rat(2) + t(1) * t(1));
    CHECK(a.pow(0) == MPoly::constant(2, Rat(1)));
    CHECK(a.eval({Rat(3), Rat(1)}) == Rat(2));
}

TEST_CASE("homogeneous components and least and most maps") {
    MPoly p = MPoly::constant(2, Rat(2)) + t(0) + t(0) * t(1) * Rat(3);
    CHECK(p.homogeneous_component(0) == MPoly::constant(2, Rat(2)));
    CHECK(p.homogeneous_component(1) == t(0));
    CHECK(p.homogeneous_component(2) == t(0) * t(1) * Rat(3));
    CHECK(p.homogeneous_component(5).is_zero());
    CHECK(p.least() == MPoly::constant(2, Rat(2)));
    CHECK(p.most() == t(0) * t(1) * Rat(3));
    MPoly q = t(1) + t(0) * t(0);
    CHECK(q.least() == t(1));
}

TEST_CASE("differential action of polynomials") {
    MPoly p = t(0).pow(2) * t(1);
    CHECK(diff_apply(t(0), p) == t(0) * t(1) * Rat(2));
    CHECK(diff_apply(t(1), p) == t(0).pow(2));
    CHECK(diff_apply(t(0) * t(1), p) == t(0) * Rat(2));
    CHECK(diff_apply(t(0).pow(3), p).is_zero());
    MPoly mixed = t(0).pow(2) + t(1);
    CHECK(diff_apply(mixed, t(0).pow(3)) == t(0) * Rat(6));
    CHECK(diff_apply(MPoly::constant(2, Rat(3)), p) == p * Rat(3));
}

TEST_CASE("apolarity pairing values") {
    CHECK(pairing(t(0).pow(2), t(0).pow(2)) == Rat(2));
    CHECK(pairing(t(0) * t(1), t(0) * t(1)) == Rat(1));
    CHECK(pairing(t(0).pow(2), t(1).pow(2)) == Rat(0));
    CHECK(pairing(t(0).pow(2), t(0) * t(1)) == Rat(0));
    CHECK(pairing(t(0), t(0).pow(2)) == Rat(0));
    MPoly p = t(0) * Rat(2) + t(1) * Rat(3);
    MPoly q = t(0) - t(1);
    CHECK(pairing(p, q) == Rat(-1));
    CHECK(pairing(p, q) == pairing(q, p));
}

TEST_CASE("products of column forms") {
    GroundSet X = cfg::k3();
    MPoly p = p_of(X, {0, 1, 2});
    CHECK(p == t(0) * t(1) * (t(0) - t(1)));
    CHECK(p_of(X, {}) == MPoly::constant(2, Rat(1)));
    CHECK(p_of(X, {2}) == t(0) - t(1));
}

TEST_CASE("coefficient rows round trip") {
    std::vector<Expo> monos = monomials_of_degree(2, 2);
    MPoly p = t(0).pow(2) * Rat(3) - t(0) * t(1) + t(1).pow(2) * Rat(1, 2);
    RatVec row = coeff_row(p, monos);
    CHECK(row == RatVec{Rat(3), Rat(-1), Rat(1, 2)});
    CHECK(from_coeff_row(2, monos, row) == p);
}

TEST_CASE("truncated exponentials hold raw taylor coefficients") {
    RatVec alpha = {Rat(2), Rat(-1, 2)};
    TruncatedSeries f = TruncatedSeries::exponential(alpha, 3);
    CHECK(f.coeff({0, 0}) == Rat(1));
    CHECK(f.coeff({1, 0}) == Rat(2));
    CHECK(f.coeff({0, 1}) == Rat(-1, 2));
    CHECK(f.coeff({2, 0}) == Rat(2));
    CHECK(f.coeff({1, 1}) == Rat(-1));
    CHECK(f.coeff({2, 1}) == Rat(-1));
    CHECK(f.coeff({3, 0}) == Rat(4, 3));
}

TEST_CASE("pairing against an exponential evaluates the polynomial") {
    std::vector<RatVec> points = {{Rat(1), Rat(1)}, {Rat(1, 2), Rat(-3)}, {Rat(0), Rat(2)}};
    std::vector<MPoly> polys = {t(0).pow(3), (t(0) + t(1) * Rat(2)).pow(2),
                                t(0) * t(1) - MPoly::constant(2, Rat(7))};
    for (const RatVec& a : points)
        for (const MPoly& p : polys) {
            TruncatedSeries f = TruncatedSeries::exponential(a, p.degree());
            CHECK(pairing(p, f) == p.eval(a));
        }
}

TEST_CASE("rendering is deterministic") {
    CHECK(MPoly(2).render() == "0");
    CHECK(MPoly::linear_form(IntVec{1, -1}).render() == "t1 - t2");
    CHECK((t(0) + t(1)).pow(2).render() == "t1^2 + 2*t1*t2 + t2^2");
    CHECK((MPoly::constant(2, Rat(1, 2)) - t(0)).render() == "1/2 - t1");
    CHECK(MPoly::monomial(3, {0, 1, 2}).render() == "t2*t3^2");
}
