#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <hhodge/solvers.hpp>
#include <hhodge/wdvv.hpp>

using namespace hhodge;

TEST_CASE("identity expansion over the Klein four group") {
    const GroupData& g = group_table(Group::Z2xZ2);
    // Empty base, (z1 z1 | z2 z2) vs (z1 z2 | z1 z2): the left side reduces
    // to the trivial middle class, the right side to the z3 middle class.
    const WdvvIdentity id = generate_identity(g, {0, 0, 0}, {1, 1, 2, 2});
    const HurwitzTable empty{Group::Z2xZ2, 3, {}};
    const TableOracle oracle(g, empty);
    Rational lhs(0), rhs(0);
    for (const auto& t : id.lhs) lhs += t.coeff * oracle.value(t.left) * oracle.value(t.right);
    for (const auto& t : id.rhs) rhs += t.coeff * oracle.value(t.left) * oracle.value(t.right);
    CHECK(lhs == Rational(1, 4));
    CHECK(rhs == Rational(1, 4));
    CHECK(evaluate_identity(id, oracle) == 0);
}

TEST_CASE("middle classes close within the group") {
    const GroupData& a4 = group_table(Group::A4);
    const WdvvIdentity id = generate_identity(a4, {0, 0, 0}, {1, 4 - 1, 1, 4 - 1});
    for (const auto& t : id.lhs) CHECK(t.left.size() == 4);  // A4 has four classes

    // S4 base (sigma), (tau tau | zeta zeta): surviving middles have even
    // sign, so every left factor keeps exactly the two tau insertions and
    // no rho.
    const GroupData& s4 = group_table(Group::S4);
    const WdvvIdentity sid = generate_identity(s4, {0, 1, 0, 0}, {1, 1, 4, 4});
    CHECK(!sid.lhs.empty());
    for (const auto& t : sid.lhs) {
        CHECK(t.left[1] == 2);
        CHECK(t.left[3] == 0);
    }
}

TEST_CASE("identities vanish on closed form tables") {
    const int N = 7;
    for (Group grp : {Group::Z2xZ2, Group::A4}) {
        const GroupData& g = group_table(grp);
        const HurwitzTable table = extract_table(build_explicit(grp, N), grp);
        const TableOracle oracle(g, table);
        const auto ids = all_identities(g, N);
        CHECK(ids.size() > 100);
        for (const auto& id : ids) CHECK(evaluate_identity(id, oracle) == 0);
    }
}

TEST_CASE("a corrupted table is detected") {
    const int N = 6;
    const GroupData& g = group_table(Group::Z2xZ2);
    HurwitzTable table = extract_table(build_explicit(Group::Z2xZ2, N), Group::Z2xZ2);
    table.entries[{2, 2, 0}] += 1;
    const TableOracle oracle(g, table);
    bool detected = false;
    for (const auto& id : all_identities(g, N))
        if (evaluate_identity(id, oracle) != 0) {
            detected = true;
            break;
        }
    CHECK(detected);
}

TEST_CASE("pairing symmetry of the closed forms") {
    for (Group grp : {Group::Z2xZ2, Group::A4}) {
        const MultiSeries f = build_explicit(grp, 7);
        CHECK(pairing_symmetry_check(f, group_table(grp)));
    }
}

TEST_CASE("pairing symmetry detects corruption") {
    MultiSeries f = build_explicit(Group::Z2xZ2, 6);
    MultiSeries bad = f;
    bad.add_term({2, 2, 0}, CycNumber::from(Rational(1, 7)));
    CHECK_FALSE(pairing_symmetry_check(bad, group_table(Group::Z2xZ2)));
}

TEST_CASE("the section PDE holds with the covering-count constant") {
    const MultiSeries t = build_s4_section(8);
    CHECK(s4_pde_check(t));

    // At the origin the residual isolates the constant: 3*1 - 8*(1/4) - 1.
    const MultiSeries r = s4_pde_residual(t);
    CHECK(r.coeff({0, 0}).is_zero());

    MultiSeries bad = t;
    bad.add_term({2, 2}, CycNumber::from(Rational(1, 5)));
    CHECK_FALSE(s4_pde_check(bad));
}
