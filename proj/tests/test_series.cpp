#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hhodge/series.hpp>

using namespace hhodge;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};

MultiSeries monomial(const std::vector<std::string>& vars, std::vector<int> exp, Rational c,
                     int order) {
    MultiSeries s(vars, order);
    s.add_term(exp, CycNumber::from(c));
    return s;
}

MultiSeries random_series(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> expd(0, 2);
    MultiSeries s(xyz, order);
    for (int t = 0; t < 6; ++t) {
        std::vector<int> e{expd(rng), expd(rng), expd(rng)};
        s.add_term(e, CycNumber::from(Rational(num(rng))) +
                          CycNumber::sqrt3() * Rational(num(rng), 3));
    }
    return s;
}

}  // namespace

TEST_CASE("truncated products") {
    const std::vector<std::string> x{"x"};
    MultiSeries one_plus(x, 2), one_minus(x, 2);
    one_plus.add_term({0}, CycNumber::one());
    one_plus.add_term({1}, CycNumber::one());
    one_minus.add_term({0}, CycNumber::one());
    one_minus.add_term({1}, CycNumber::from_int(-1));
    const MultiSeries p = one_plus * one_minus;
    CHECK(p.coeff({0}) == CycNumber::one());
    CHECK(p.coeff({1}).is_zero());
    CHECK(p.coeff({2}) == CycNumber::from_int(-1));

    // Degree-4 content is truncated away at order 3.
    const std::vector<std::string> xy{"x", "y"};
    MultiSeries m(xy, 3);
    m.add_term({1, 1}, CycNumber::one());
    CHECK((m * m).is_zero());

    MultiSeries a(x, 3), b(x, 3);
    a.add_term({1}, CycNumber::one());
    b.add_term({2}, CycNumber::from(Rational(1, 2)));
    CHECK((a * b).coeff({3}) == CycNumber::from(Rational(1, 2)));
}

TEST_CASE("variable mismatch is rejected") {
    MultiSeries a({"x"}, 3), b({"y"}, 3);
    CHECK_THROWS_AS(a + b, VariableMismatch);
    CHECK_THROWS_AS(a * b, VariableMismatch);
}

TEST_CASE("product is commutative and associative up to truncation") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        const MultiSeries a = random_series(rng, 6), b = random_series(rng, 6),
                          c = random_series(rng, 6);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("linear substitution") {
    const std::vector<std::string> u{"u"};
    // x*y*z -> u^3 under x,y,z -> u.
    MultiSeries s = monomial(xyz, {1, 1, 1}, Rational(1), 4);
    auto sub = s.linear_substitute(u, {{CycNumber::one()}, {CycNumber::one()}, {CycNumber::one()}});
    CHECK(sub.coeff({3}) == CycNumber::one());
    CHECK(sub.terms().size() == 1);

    // x^2 + x*y -> u^2 under x -> u, y -> 0.
    MultiSeries t = monomial(xyz, {2, 0, 0}, Rational(1), 4);
    t.add_term({1, 1, 0}, CycNumber::one());
    auto tu = t.linear_substitute(u, {{CycNumber::one()}, {CycNumber::zero()}, {CycNumber::zero()}});
    CHECK(tu.coeff({2}) == CycNumber::one());
    CHECK(tu.terms().size() == 1);

    // x^3 -> (omega u)^3 = u^3.
    MultiSeries c = monomial(xyz, {3, 0, 0}, Rational(1), 4);
    auto cu = c.linear_substitute(u, {{CycNumber::omega()}, {CycNumber::zero()}, {CycNumber::zero()}});
    CHECK(cu.coeff({3}) == CycNumber::one());
}

TEST_CASE("derivatives") {
    MultiSeries s = monomial(xyz, {2, 1, 0}, Rational(3), 5);
    const MultiSeries dx = s.derivative(0);
    CHECK(dx.coeff({1, 1, 0}) == CycNumber::from_int(6));
    CHECK(dx.order() == 4);
    CHECK(s.derivative(2).is_zero());
}

TEST_CASE("integral coefficients undo the factorial normalization") {
    MultiSeries s = monomial(xyz, {2, 2, 0}, Rational(1, 4), 5);
    CHECK(s.integral_coefficient({2, 2, 0}) == Rational(1));
    CHECK(s.integral_coefficient({1, 1, 1}) == Rational(0));
    CHECK_THROWS_AS(s.integral_coefficient({4, 2, 0}), DegreeOutOfRange);

    MultiSeries irr = monomial(xyz, {1, 0, 0}, Rational(1), 5);
    MultiSeries scaled = irr * CycNumber::sqrt2();
    CHECK_THROWS_AS(scaled.integral_coefficient({1, 0, 0}), NotRational);
}
