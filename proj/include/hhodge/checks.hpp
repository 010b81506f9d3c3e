#pragma once

#include <string>
#include <vector>

#include <hhodge/potentials.hpp>
#include <hhodge/solvers.hpp>
#include <hhodge/wdvv.hpp>

namespace hhodge {

// One verification outcome; every comparison behind it is exact.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline CheckResult check_named(const std::string& name, bool pass,
                               const std::string& detail = "") {
    return {name, pass, detail};
}

// Root-system form against the explicit trigonometric forms, including the
// positive-root counts and the inert black-supported roots.
inline std::vector<CheckResult> run_theorem1_checks(int order) {
    std::vector<CheckResult> out;
    const RootSystemData d4 = positive_roots(RootSystem::D4);
    const RootSystemData e6 = positive_roots(RootSystem::E6);
    out.push_back(check_named("root-count/d4", d4.positive_roots.size() == 12,
                              std::to_string(d4.positive_roots.size()) + " positive roots"));
    out.push_back(check_named("root-count/e6", e6.positive_roots.size() == 36,
                              std::to_string(e6.positive_roots.size()) + " positive roots"));
    int inert = 0;
    for (const auto& alpha : d4.positive_roots) {
        const auto w = white_coordinates(d4, alpha);
        bool zero = true;
        for (int x : w) zero = zero && x == 0;
        if (!zero) continue;
        ++inert;
        std::vector<CycNumber> linear(3);
        if (!expand_h_term({Rational(1), {Rational(1)}, linear},
                           potential_variables(Group::Z2xZ2), order)
                 .is_zero())
            inert = -1000;
    }
    out.push_back(check_named("inert-roots/d4", inert == 1, "black-supported roots contribute 0"));
    for (Group g : {Group::Z2xZ2, Group::A4}) {
        const bool eq = build_root_system_form(g, order) == build_explicit(g, order);
        out.push_back(check_named("root-form-equals-explicit/" + group_token(g), eq,
                                  "order " + std::to_string(order)));
    }
    return out;
}

inline std::vector<CheckResult> run_wdvv_checks(int order) {
    std::vector<CheckResult> out;
    for (Group grp : {Group::Z2xZ2, Group::A4}) {
        const GroupData& g = group_table(grp);
        const HurwitzTable table = extract_table(build_explicit(grp, order), grp);
        const TableOracle oracle(g, table);
        const auto ids = all_identities(g, order);
        long failures = 0;
        for (const auto& id : ids)
            if (evaluate_identity(id, oracle) != 0) ++failures;
        out.push_back(check_named("identities-vanish/" + group_token(grp), failures == 0,
                                  std::to_string(ids.size()) + " identities through length " +
                                      std::to_string(order)));
        out.push_back(check_named("pairing-symmetry/" + group_token(grp),
                                  pairing_symmetry_check(build_explicit(grp, order), g),
                                  "derivative order " + std::to_string(order - 3)));
    }
    out.push_back(check_named("section-pde/s4", s4_pde_check(build_s4_section(order)),
                              "total order " + std::to_string(order)));
    return out;
}

inline std::vector<CheckResult> run_specialization_checks(int order) {
    std::vector<CheckResult> out;
    const std::vector<std::string> x{"x"};
    const CycNumber one = CycNumber::one(), zero = CycNumber::zero();
    const MultiSeries fa = build_explicit(Group::A4, order);
    const MultiSeries fz = build_explicit(Group::Z2xZ2, order);
    const MultiSeries ts = build_s4_section(order);

    out.push_back(check_named(
        "a4-zeta-axis-vs-klein-diagonal",
        specialize(fa, x, {{zero}, {zero}, {one}}) * Rational(3) ==
            specialize(fz, x, {{one}, {one}, {one}}),
        "3 F_A4(0,0,x) = F_Klein(x,x,x)"));
    out.push_back(check_named(
        "a4-diagonal-vs-s4-sigma-axis",
        specialize(fa, x, {{one}, {one}, {zero}}) ==
            specialize(ts, x, {{one}, {zero}}) * Rational(2),
        "F_A4(x,x,0) = 2 T(x,0)"));
    {
        MultiSeries x0(x, order);
        const SeedData seeds = initial_seeds(order);
        const HurwitzTable z = solve_z2z2(seeds, order);
        const auto s4z = zeta_powers_from_z2z2(z, 6);
        for (int n = 3; n <= order; ++n)
            x0.add_term({n}, CycNumber::from(s4z[static_cast<std::size_t>(n)] /
                                             Rational(factorial(static_cast<unsigned>(n)))));
        out.push_back(check_named("zeta-axis-index-formula",
                                  x0 == specialize(fz, x, {{one}, {one}, {one}}) * Rational(1, 6),
                                  "X0(u) = (1/6) F_Klein(u,u,u)"));
    }
    out.push_back(check_named(
        "s4-sigma-axis-closed-form",
        specialize(ts, x, {{one}, {zero}}) == expand_h_terms(s4_sigma_axis_terms(), x, order),
        "double-angle collapse of the sigma axis"));
    return out;
}

inline std::vector<CheckResult> run_trig_checks(int order) {
    std::vector<CheckResult> out;
    const std::vector<std::string> x{"x"};
    auto h = [&](const Rational& w, const Rational& theta, long c) {
        return expand_h_term({w, {theta}, {CycNumber::from_int(c)}}, x, order);
    };
    out.push_back(check_named(
        "triple-angle", h(Rational(1, 9), Rational(0), 3) ==
                            h(Rational(1), Rational(0), 1) + h(Rational(1), Rational(2, 3), 1) +
                                h(Rational(1), Rational(-2, 3), 1),
        "(1/9)h(3u) = h(u) + h(u+2pi/3) + h(u-2pi/3) through order " + std::to_string(order)));
    out.push_back(check_named(
        "double-angle", h(Rational(1, 4), Rational(0), 2) ==
                            h(Rational(1), Rational(1, 2), 1) + h(Rational(1), Rational(-1, 2), 1),
        "(1/4)h(2u) = h(u+pi/2) + h(u-pi/2) through order " + std::to_string(order)));
    return out;
}

inline std::vector<CheckResult> run_recursion_checks(int order, RecursionResult* result = nullptr,
                                                     int cd_order = -1) {
    std::vector<CheckResult> out;
    RecursionResult local;
    RecursionResult& r = result ? *result : local;
    r = run_recursion(order);

    out.push_back(check_named(
        "route-equivalence/z2z2",
        r.z2z2.entries == extract_table(build_explicit(Group::Z2xZ2, order), Group::Z2xZ2).entries,
        "solver table = closed-form table"));
    {
        const HurwitzTable closed = extract_table(build_s4_section(order), Group::S4);
        bool eq = true;
        for (const auto& [key, value] : closed.entries)
            eq = eq && r.s4.sz(key[0], key[1]) == value;
        out.push_back(check_named("route-equivalence/s4-section", eq,
                                  "solver section = closed-form section"));
    }
    out.push_back(check_named(
        "route-equivalence/a4",
        r.a4.entries == extract_table(build_explicit(Group::A4, order), Group::A4).entries,
        "solver table = closed-form table"));
    out.push_back(check_named("branch-roots",
                              r.s4_report.branch_root_taken == 1 &&
                                  r.s4_report.branch_root_other == Rational(-1, 3),
                              "roots 1 and -1/3, anchor <sigma^2 zeta> = 1"));
    out.push_back(check_named("recurrence-leading-coefficient",
                              r.s4_report.quadratic_leading == 4, "6 X2'(0) - 8 X0'''(0) = 4"));
    {
        bool x1_zero = true;
        for (int b = 0; 1 + b <= order; ++b) x1_zero = x1_zero && r.s4.sz(1, b) == 0;
        out.push_back(check_named("x1-vanishes", x1_zero, "<sigma zeta^n> = 0"));
    }
    {
        const int n = cd_order > 0 ? cd_order : order;
        bool cd_ok = true;
        std::string detail = "squares consistent through u^" + std::to_string(n - 3);
        try {
            RecursionResult rc;
            const RecursionResult& rr = n == order ? r : (rc = run_recursion(n), rc);
            const CdRecovery cd = recover_cd(rr.s4, rr.seeds.b, n);
            cd_ok = cd.c2_times8[0] == 2 && cd.d2_times4[0] == 4 &&
                    (cd.c2_times8 * cd.d2_times4 - cd.cd_times4 * cd.cd_times4 * Rational(2))
                        .is_zero();
        } catch (const Error& e) {
            cd_ok = false;
            detail = e.what();
        }
        out.push_back(check_named("tau-rho-squares", cd_ok, detail));
    }
    return out;
}

inline std::vector<CheckResult> run_length3_checks() {
    std::vector<CheckResult> out;
    auto tp = [&](Group g, const char* a, const char* b, const char* c) {
        const GroupData& gd = group_table(g);
        return three_point(gd, gd.class_index(a), gd.class_index(b), gd.class_index(c));
    };
    struct Row {
        Group g;
        const char *a, *b, *c;
        Rational expect;
    };
    const std::vector<Row> rows{
        {Group::Z2xZ2, "z1", "z2", "z3", Rational(1, 4)},
        {Group::Z2xZ2, "one", "z1", "z1", Rational(1, 4)},
        {Group::Z2xZ2, "one", "z2", "z2", Rational(1, 4)},
        {Group::Z2xZ2, "one", "z3", "z3", Rational(1, 4)},
        {Group::A4, "s1", "s2", "zeta", Rational(1)},
        {Group::A4, "s1", "s1", "s1", Rational(4, 3)},
        {Group::A4, "s2", "s2", "s2", Rational(4, 3)},
        {Group::A4, "zeta", "zeta", "zeta", Rational(1, 2)},
        {Group::S4, "sigma", "sigma", "zeta", Rational(1)},
        {Group::S4, "tau", "tau", "sigma", Rational(1)},
        {Group::S4, "tau", "rho", "sigma", Rational(1)},
        {Group::S4, "rho", "rho", "sigma", Rational(1)},
        {Group::S4, "zeta", "zeta", "zeta", Rational(1, 4)},
        {Group::S4, "rho", "rho", "zeta", Rational(1, 4)},
        {Group::S4, "tau", "tau", "zeta", Rational(1, 4)},
        {Group::S4, "tau", "tau", "one", Rational(1, 4)},
        {Group::S4, "rho", "rho", "one", Rational(1, 4)},
        {Group::S4, "sigma", "sigma", "sigma", Rational(4, 3)},
        {Group::S4, "tau", "rho", "zeta", Rational(1, 2)},
        {Group::S4, "sigma", "sigma", "one", Rational(1, 3)},
        {Group::S4, "zeta", "zeta", "one", Rational(1, 8)},
    };
    for (const auto& row : rows) {
        const Rational v = tp(row.g, row.a, row.b, row.c);
        out.push_back(check_named("three-point/" + group_token(row.g) + "/" + row.a + "." +
                                      row.b + "." + row.c,
                                  v == row.expect,
                                  to_string(v) + " expected " + to_string(row.expect)));
    }
    return out;
}

inline std::vector<CheckResult> run_rationality_checks(int order) {
    std::vector<CheckResult> out;
    for (Group grp : {Group::Z2xZ2, Group::A4}) {
        const GroupData& g = group_table(grp);
        bool rational_ok = true, vanish_ok = true, symmetric_ok = true;
        try {
            const HurwitzTable t = extract_table(build_explicit(grp, order), grp);
            for (const auto& [key, value] : t.entries) {
                if (monodromy_vanishes(g, key) && value != 0) vanish_ok = false;
                if (grp == Group::A4 && t.at({key[1], key[0], key[2]}) != value)
                    symmetric_ok = false;
            }
        } catch (const NotRational&) {
            rational_ok = false;
        }
        out.push_back(check_named("rationality/" + group_token(grp), rational_ok,
                                  "every extracted value is rational"));
        out.push_back(check_named("monodromy-vanishing/" + group_token(grp), vanish_ok,
                                  "forbidden entries are exactly 0"));
        if (grp == Group::A4)
            out.push_back(check_named("outer-symmetry/a4", symmetric_ok,
                                      "table symmetric under s1 <-> s2"));
    }
    return out;
}

}  // namespace hhodge
