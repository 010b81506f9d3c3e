#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hhodge/cyclotomic.hpp>
#include <hhodge/linalg.hpp>
#include <hhodge/rational.hpp>

using namespace hhodge;

namespace {

CycNumber random_cyc(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    CycNumber x;
    for (int k = 0; k < CycNumber::degree; ++k)
        x += CycNumber::zeta_pow(k) * Rational(num(rng), den(rng));
    return x;
}

}  // namespace

TEST_CASE("rational string forms") {
    CHECK(to_string(Rational(5, 2)) == "5/2");
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(rational_from_string("-22/4") == Rational(-11, 2));
    CHECK(rational_from_string("13") == Rational(13));
    CHECK_THROWS_AS(rational_from_string("x/y"), Error);
}

TEST_CASE("factorials and binomials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(4, 7) == 0);
    CHECK(multinomial({2, 2, 1}) == 30);
}

TEST_CASE("embedded constants satisfy their defining relations") {
    CHECK(CycNumber::sqrt2() * CycNumber::sqrt2() == CycNumber::from_int(2));
    CHECK(CycNumber::sqrt3() * CycNumber::sqrt3() == CycNumber::from_int(3));
    CHECK(CycNumber::i_unit() * CycNumber::i_unit() == CycNumber::from_int(-1));
    const CycNumber w = CycNumber::omega();
    CHECK(w != CycNumber::one());
    CHECK(w * w * w == CycNumber::one());
    CHECK(w * CycNumber::omega_bar() == CycNumber::one());
    CHECK(w + CycNumber::omega_bar() == CycNumber::from_int(-1));
    CHECK(CycNumber::zeta_pow(12) == CycNumber::from_int(-1));
    CHECK(CycNumber::zeta_pow(12) * CycNumber::zeta_pow(12) == CycNumber::one());
}

TEST_CASE("difference of squares in the field") {
    const CycNumber a = CycNumber::one() + CycNumber::i_unit();
    const CycNumber b = CycNumber::one() - CycNumber::i_unit();
    CHECK(a * b == CycNumber::from_int(2));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 40; ++trial) {
        const CycNumber a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("inverses") {
    CHECK(CycNumber::from_int(2).inverse() == CycNumber::from(Rational(1, 2)));
    CHECK(CycNumber::sqrt3().inverse() == CycNumber::sqrt3() * Rational(1, 3));
    CHECK(CycNumber::omega().inverse() == CycNumber::omega() * CycNumber::omega());
    CHECK_THROWS_AS(CycNumber::zero().inverse(), DivisionByZero);

    std::mt19937_64 rng(987654);
    int nonzero = 0;
    while (nonzero < 25) {
        const CycNumber a = random_cyc(rng);
        if (a.is_zero()) continue;
        ++nonzero;
        CHECK(a * a.inverse() == CycNumber::one());
    }
}

TEST_CASE("rationality detection") {
    CHECK(CycNumber::from(Rational(5, 2)).as_rational() == Rational(5, 2));
    CHECK_THROWS_AS(CycNumber::sqrt3().as_rational(), NotRational);
    CHECK((CycNumber::sqrt3() * CycNumber::sqrt3() - CycNumber::from_int(3)).is_zero());
    CHECK((CycNumber::sqrt3() * CycNumber::sqrt3() - CycNumber::from_int(3)).as_rational() == 0);
}

TEST_CASE("conjugation and reality") {
    CHECK(CycNumber::sqrt2().is_real());
    CHECK(CycNumber::sqrt3().is_real());
    CHECK_FALSE(CycNumber::i_unit().is_real());
    CHECK(CycNumber::i_unit().conj() == -CycNumber::i_unit());
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        const CycNumber a = random_cyc(rng);
        CHECK((a * a.conj()).is_real());
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("coordinate string serialization") {
    const auto s = (CycNumber::sqrt3() * Rational(1, 3)).coeff_strings();
    CHECK(s == std::array<std::string, 8>{"0", "0", "2/3", "0", "0", "0", "-1/3", "0"});
    CHECK(CycNumber::from(Rational(-5, 2)).coeff_strings()[0] == "-5/2");
}

TEST_CASE("square roots of small rationals") {
    CHECK(cyc_sqrt(Rational(4)) == CycNumber::from_int(2));
    CHECK(cyc_sqrt(Rational(3)) == CycNumber::sqrt3());
    CHECK(cyc_sqrt(Rational(2)) == CycNumber::sqrt2());
    CHECK(cyc_sqrt(Rational(6)) * cyc_sqrt(Rational(6)) == CycNumber::from_int(6));
    CHECK(cyc_sqrt(Rational(9, 4)) == CycNumber::from(Rational(3, 2)));
    CHECK(cyc_sqrt(Rational(0)) == CycNumber::zero());
}

TEST_CASE("exact linear solve") {
    LinearSystem<Rational> sys(2);
    sys.add_row({Rational(2), Rational(1)}, Rational(5));
    sys.add_row({Rational(1), Rational(-1)}, Rational(1));
    sys.add_row({Rational(3), Rational(0)}, Rational(6));  // redundant, consistent
    const auto x = sys.solve("test");
    CHECK(x[0] == Rational(2));
    CHECK(x[1] == Rational(1));

    LinearSystem<Rational> bad(2);
    bad.add_row({Rational(1), Rational(1)}, Rational(1));
    bad.add_row({Rational(2), Rational(2)}, Rational(3));
    CHECK_THROWS_AS(bad.solve("test"), Error);

    LinearSystem<Rational> deficient(2);
    deficient.add_row({Rational(1), Rational(0)}, Rational(1));
    CHECK_THROWS_AS(deficient.solve("test"), RankDeficient);
}
