#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <hhodge/groups.hpp>
#include <hhodge/roots.hpp>

using namespace hhodge;

namespace {

Rational tp(Group g, const char* a, const char* b, const char* c) {
    const GroupData& gd = group_table(g);
    return three_point(gd, gd.class_index(a), gd.class_index(b), gd.class_index(c));
}

}  // namespace

TEST_CASE("group sizes, classes and centralizers") {
    const GroupData& s4 = group_table(Group::S4);
    CHECK(s4.order() == 24);
    CHECK(s4.z == std::vector<int>{24, 4, 3, 4, 8});

    const GroupData& a4 = group_table(Group::A4);
    CHECK(a4.order() == 12);
    CHECK(a4.z == std::vector<int>{12, 3, 3, 4});

    const GroupData& v4 = group_table(Group::Z2xZ2);
    CHECK(v4.order() == 4);
    CHECK(v4.z == std::vector<int>{4, 4, 4, 4});

    for (Group g : {Group::Z2xZ2, Group::A4, Group::S4}) {
        const GroupData& gd = group_table(g);
        int total = 0;
        for (int c = 0; c < gd.nclasses; ++c) {
            const int size = static_cast<int>(gd.class_members[static_cast<std::size_t>(c)].size());
            CHECK(gd.z[static_cast<std::size_t>(c)] * size == gd.order());
            total += size;
        }
        CHECK(total == gd.order());
    }
}

TEST_CASE("inverse involution") {
    const GroupData& v4 = group_table(Group::Z2xZ2);
    for (int c = 0; c < v4.nclasses; ++c) CHECK(v4.inverse_class[static_cast<std::size_t>(c)] == c);
    const GroupData& s4 = group_table(Group::S4);
    for (int c = 0; c < s4.nclasses; ++c) CHECK(s4.inverse_class[static_cast<std::size_t>(c)] == c);
    const GroupData& a4 = group_table(Group::A4);
    CHECK(a4.inverse_class == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("SO(3) character") {
    const GroupData& a4 = group_table(Group::A4);
    CHECK(a4.chi_V[0] == CycNumber::from_int(3));
    CHECK(a4.chi_V[1] == CycNumber::zero());
    CHECK(a4.chi_V[2] == CycNumber::zero());
    CHECK(a4.chi_V[3] == CycNumber::from_int(-1));

    const GroupData& v4 = group_table(Group::Z2xZ2);
    for (int c = 1; c < 4; ++c) CHECK(v4.chi_V[static_cast<std::size_t>(c)] == CycNumber::from_int(-1));

    // Rotation angles of the cube: identity, edge flip, vertex turn,
    // quarter face turn, half face turn.
    const GroupData& s4 = group_table(Group::S4);
    CHECK(s4.chi_V[0] == CycNumber::from_int(3));
    CHECK(s4.chi_V[1] == CycNumber::from_int(-1));
    CHECK(s4.chi_V[2] == CycNumber::zero());
    CHECK(s4.chi_V[3] == CycNumber::one());
    CHECK(s4.chi_V[4] == CycNumber::from_int(-1));
}

TEST_CASE("character tables are exactly orthogonal") {
    for (Group g : {Group::Z2xZ2, Group::A4, Group::S4}) {
        const GroupData& gd = group_table(g);
        // Column orthogonality: sum over irreps of chi(c_i) conj(chi(c_j))
        // equals z_i delta_ij.
        for (int i = 0; i < gd.nclasses; ++i)
            for (int j = 0; j < gd.nclasses; ++j) {
                CycNumber sum;
                for (const auto& row : gd.char_table)
                    sum += row[static_cast<std::size_t>(i)] * row[static_cast<std::size_t>(j)].conj();
                const CycNumber expected =
                    i == j ? CycNumber::from_int(gd.z[static_cast<std::size_t>(i)]) : CycNumber::zero();
                CHECK(sum == expected);
            }
        // Dimensions match the trivial-class column.
        for (std::size_t r = 0; r < gd.char_table.size(); ++r)
            CHECK(gd.char_table[r][0] == CycNumber::from_int(gd.dims[r]));
    }
}

TEST_CASE("A4 linear characters take omega values") {
    const GroupData& a4 = group_table(Group::A4);
    CHECK(a4.char_table[1][1] == CycNumber::omega());
    CHECK(a4.char_table[1][2] == CycNumber::omega_bar());
    CHECK(a4.char_table[1][3] == CycNumber::one());
    CHECK(a4.char_table[2][1] == CycNumber::omega_bar());
    CHECK(a4.char_table[2][2] == CycNumber::omega());
}

TEST_CASE("three point values: Klein four group") {
    CHECK(tp(Group::Z2xZ2, "z1", "z2", "z3") == Rational(1, 4));
    CHECK(tp(Group::Z2xZ2, "one", "z1", "z1") == Rational(1, 4));
    CHECK(tp(Group::Z2xZ2, "one", "z2", "z2") == Rational(1, 4));
    CHECK(tp(Group::Z2xZ2, "one", "z3", "z3") == Rational(1, 4));
    CHECK(tp(Group::Z2xZ2, "z1", "z1", "z2") == 0);
}

TEST_CASE("three point values: A4") {
    CHECK(tp(Group::A4, "s1", "s2", "zeta") == 1);
    CHECK(tp(Group::A4, "s1", "s1", "s1") == Rational(4, 3));
    CHECK(tp(Group::A4, "s2", "s2", "s2") == Rational(4, 3));
    CHECK(tp(Group::A4, "zeta", "zeta", "zeta") == Rational(1, 2));
    CHECK(tp(Group::A4, "s1", "s1", "zeta") == 0);
    CHECK(tp(Group::A4, "s1", "s2", "s1") == 0);
}

TEST_CASE("three point values: S4") {
    CHECK(tp(Group::S4, "sigma", "sigma", "zeta") == 1);
    CHECK(tp(Group::S4, "tau", "tau", "sigma") == 1);
    CHECK(tp(Group::S4, "tau", "rho", "sigma") == 1);
    CHECK(tp(Group::S4, "rho", "rho", "sigma") == 1);
    CHECK(tp(Group::S4, "zeta", "zeta", "zeta") == Rational(1, 4));
    CHECK(tp(Group::S4, "rho", "rho", "zeta") == Rational(1, 4));
    CHECK(tp(Group::S4, "tau", "tau", "zeta") == Rational(1, 4));
    CHECK(tp(Group::S4, "tau", "tau", "one") == Rational(1, 4));
    CHECK(tp(Group::S4, "rho", "rho", "one") == Rational(1, 4));
    CHECK(tp(Group::S4, "sigma", "sigma", "sigma") == Rational(4, 3));
    CHECK(tp(Group::S4, "tau", "rho", "zeta") == Rational(1, 2));
    CHECK(tp(Group::S4, "sigma", "sigma", "one") == Rational(1, 3));
    CHECK(tp(Group::S4, "zeta", "zeta", "one") == Rational(1, 8));
}

TEST_CASE("three point symmetries and pairing") {
    std::mt19937_64 rng(777);
    for (Group g : {Group::Z2xZ2, Group::A4, Group::S4}) {
        const GroupData& gd = group_table(g);
        std::uniform_int_distribution<int> cls(0, gd.nclasses - 1);
        for (int t = 0; t < 15; ++t) {
            int a = cls(rng), b = cls(rng), c = cls(rng);
            const Rational v = three_point(gd, a, b, c);
            CHECK(three_point(gd, b, a, c) == v);
            CHECK(three_point(gd, c, b, a) == v);
            CHECK(three_point(gd, gd.inverse_class[static_cast<std::size_t>(a)],
                              gd.inverse_class[static_cast<std::size_t>(b)],
                              gd.inverse_class[static_cast<std::size_t>(c)]) == v);
        }
        for (int c = 0; c < gd.nclasses; ++c)
            CHECK(three_point(gd, c, gd.inverse_class[static_cast<std::size_t>(c)], 0) ==
                  Rational(1, gd.z[static_cast<std::size_t>(c)]));
    }
}

TEST_CASE("monodromy vanishing criterion") {
    const GroupData& v4 = group_table(Group::Z2xZ2);
    CHECK(monodromy_vanishes(v4, {2, 1, 0}));
    CHECK_FALSE(monodromy_vanishes(v4, {1, 1, 1}));
    CHECK_FALSE(monodromy_vanishes(v4, {2, 2, 0}));
    CHECK(monodromy_vanishes(v4, {3, 0, 0}));

    const GroupData& a4 = group_table(Group::A4);
    CHECK_FALSE(monodromy_vanishes(a4, {4, 1, 2}));  // 4 = 1 mod 3
    CHECK(monodromy_vanishes(a4, {2, 1, 0}));
    CHECK_FALSE(monodromy_vanishes(a4, {0, 0, 5}));

    const GroupData& s4 = group_table(Group::S4);
    CHECK_FALSE(monodromy_vanishes(s4, {1, 2, 1, 3}));  // even tau+rho count
    CHECK(monodromy_vanishes(s4, {1, 2, 0, 3}));
    // Full-arity vector with explicit trivial entries is accepted too.
    CHECK(monodromy_vanishes(s4, {2, 1, 2, 0, 3}));
}

TEST_CASE("modified character table L") {
    const auto Lv = l_matrix(group_table(Group::Z2xZ2));
    for (const auto& row : Lv)
        for (const auto& e : row) {
            const Rational r = e.as_rational();
            CHECK((r == Rational(1, 2) || r == Rational(-1, 2)));
        }

    const auto La = l_matrix(group_table(Group::A4));
    // Classes are ordered (s1, s2, zeta); irreps (omega, omega^2, dim 3).
    CHECK(La[2][2] == CycNumber::from(Rational(-1, 2)));
    CHECK(La[0][0] == CycNumber::omega() * CycNumber::sqrt3() * Rational(1, 3));
    // Swapping the conjugate characters exchanges the s1 and s2 rows.
    CHECK(La[0][0] == La[1][1]);
    CHECK(La[0][1] == La[1][0]);
    CHECK(La[0][2] == La[1][2]);

    CHECK_THROWS_AS(l_matrix(group_table(Group::S4)), UnsupportedGroup);
}

TEST_CASE("positive root enumeration") {
    const RootSystemData d4 = positive_roots(RootSystem::D4);
    CHECK(d4.positive_roots.size() == 12);
    CHECK(d4.is_positive_root({2, 1, 1, 1}));  // highest root, center doubled
    CHECK(d4.is_positive_root({1, 1, 0, 0}));
    CHECK_FALSE(d4.is_positive_root({0, 1, 1, 0}));  // outer nodes not adjacent

    const RootSystemData e6 = positive_roots(RootSystem::E6);
    CHECK(e6.positive_roots.size() == 36);
    CHECK(e6.is_positive_root({1, 2, 3, 2, 1, 2}));  // highest root
}

TEST_CASE("white coordinates") {
    const RootSystemData d4 = positive_roots(RootSystem::D4);
    CHECK(white_coordinates(d4, {0, 1, 0, 0}) == std::vector<int>{1, 0, 0});
    CHECK(white_coordinates(d4, {1, 0, 0, 0}) == std::vector<int>{0, 0, 0});
    CHECK(white_coordinates(d4, {1, 1, 0, 0}) == std::vector<int>{1, 0, 0});
    CHECK_THROWS_AS(white_coordinates(d4, {5, 0, 0, 0}), RootNotFound);

    const RootSystemData e6 = positive_roots(RootSystem::E6);
    CHECK(white_coordinates(e6, {1, 2, 3, 2, 1, 2}) == std::vector<int>{1, 3, 1});
}

TEST_CASE("enumeration is stable under relabeling the simple roots") {
    const RootSystemData base = positive_roots(RootSystem::E6);
    const std::vector<int> perm{4, 3, 2, 1, 0, 5};  // reverse the chain
    const RootSystemData relabeled = positive_roots(RootSystem::E6, false, perm);
    // Mapping the relabeled roots back must reproduce the same set.
    std::vector<std::vector<int>> mapped;
    for (const auto& r : relabeled.positive_roots) {
        std::vector<int> back(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) back[static_cast<std::size_t>(perm[i])] = r[i];
        mapped.push_back(back);
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == base.positive_roots);
}
