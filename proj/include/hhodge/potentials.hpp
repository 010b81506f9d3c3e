#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <hhodge/groups.hpp>
#include <hhodge/hkernel.hpp>
#include <hhodge/roots.hpp>
#include <hhodge/series.hpp>

namespace hhodge {

// Finite table of exact integral values, keyed by exponent vectors over the
// group's nontrivial classes (for the S4 section: over (sigma, zeta)).
struct HurwitzTable {
    Group group;
    int order = 0;
    std::map<std::vector<int>, Rational> entries;

    const Rational& at(const std::vector<int>& key) const {
        auto it = entries.find(key);
        if (it == entries.end()) {
            std::string s = "(";
            for (std::size_t i = 0; i < key.size(); ++i)
                s += (i ? "," : "") + std::to_string(key[i]);
            throw MissingEntry(group_token(group) + " " + s + ")");
        }
        return it->second;
    }
};

inline std::vector<std::string> potential_variables(Group g) {
    if (g == Group::S4) return {"u", "v"};
    return {"x1", "x2", "x3"};
}

// The explicit trigonometric form for Z2xZ2: four terms at phase -pi/2 with
// half-sum linear forms in the stated sign patterns, plus (1/2)h(x_i).
inline std::vector<HTerm> z2z2_explicit_terms() {
    const Rational h(1, 2);
    const CycNumber p = CycNumber::from(h), m = CycNumber::from(-h);
    const CycNumber one = CycNumber::one(), zero = CycNumber::zero();
    std::vector<HTerm> t;
    const Rational phase(-1, 2);
    t.push_back({Rational(1), {phase}, {p, p, p}});
    t.push_back({Rational(1), {phase}, {m, p, m}});
    t.push_back({Rational(1), {phase}, {p, m, m}});
    t.push_back({Rational(1), {phase}, {m, m, p}});
    t.push_back({h, {Rational(0)}, {one, zero, zero}});
    t.push_back({h, {Rational(0)}, {zero, one, zero}});
    t.push_back({h, {Rational(0)}, {zero, zero, one}});
    return t;
}

// The explicit form for A4: eleven terms built from (x1+x2)/sqrt3 and its
// omega-twists, +-x3/2, and phases in {-5pi/6, -pi/3, pi/6, pi/2, 0}.
inline std::vector<HTerm> a4_explicit_terms() {
    const CycNumber s = CycNumber::sqrt3() * Rational(1, 3);  // 1/sqrt3
    const CycNumber w = CycNumber::omega(), wb = CycNumber::omega_bar();
    const CycNumber half = CycNumber::from(Rational(1, 2));
    const CycNumber mhalf = CycNumber::from(Rational(-1, 2));
    const CycNumber one = CycNumber::one(), zero = CycNumber::zero();
    const Rational far(-5, 6), mid(-1, 3), near(1, 6), top(1, 2);
    std::vector<HTerm> t;
    t.push_back({Rational(1), {far}, {s, s, half}});
    t.push_back({Rational(2), {mid}, {s, s, zero}});
    t.push_back({Rational(1), {far}, {w * s, wb * s, half}});
    t.push_back({Rational(2), {mid}, {w * s, wb * s, zero}});
    t.push_back({Rational(1), {far}, {wb * s, w * s, half}});
    t.push_back({Rational(2), {mid}, {wb * s, w * s, zero}});
    t.push_back({Rational(1), {near}, {s, s, mhalf}});
    t.push_back({Rational(1), {near}, {w * s, wb * s, mhalf}});
    t.push_back({Rational(1), {near}, {wb * s, w * s, mhalf}});
    t.push_back({Rational(4), {top}, {zero, zero, half}});
    t.push_back({Rational(1, 2), {Rational(0)}, {zero, zero, one}});
    return t;
}

// The five-term kernel K(u,v) whose combination (1/2)K(2u,v) + K(-u,v) is
// the (sigma, zeta) section of the S4 potential. The fourth term reads
// v/2 + pi/2: any u-content there would leave irrational coefficients in
// the pure-sigma integrals, and v/2 is the unique reading under which the
// section equals half the diagonally specialized A4 potential.
inline std::vector<HTerm> s4_kernel_terms() {
    const CycNumber s = CycNumber::sqrt3() * Rational(1, 3);  // 1/sqrt3
    const CycNumber half = CycNumber::from(Rational(1, 2));
    const CycNumber mhalf = CycNumber::from(Rational(-1, 2));
    const CycNumber zero = CycNumber::zero();
    std::vector<HTerm> t;
    t.push_back({Rational(1), {Rational(-5, 6)}, {s, half}});
    t.push_back({Rational(2), {Rational(-1, 3)}, {s, zero}});
    t.push_back({Rational(1), {Rational(1, 6)}, {s, mhalf}});
    t.push_back({Rational(2), {Rational(1, 2)}, {zero, half}});
    t.push_back({Rational(2, 3), {Rational(3, 2)}, {zero, half}});
    return t;
}

// Closed form of the sigma-axis section, obtained from the two-variable
// section by collapsing the pi/2-shifted pairs with the double-angle
// identity: (1/8)h(4x/sqrt3 - 2pi/3) + (1/4)h(-2x/sqrt3 - 2pi/3)
//          + h(2x/sqrt3 - pi/3) + 2h(-x/sqrt3 - pi/3).
inline std::vector<HTerm> s4_sigma_axis_terms() {
    const CycNumber s = CycNumber::sqrt3() * Rational(1, 3);
    std::vector<HTerm> t;
    t.push_back({Rational(1, 8), {Rational(-2, 3)}, {s * Rational(4)}});
    t.push_back({Rational(1, 4), {Rational(-2, 3)}, {s * Rational(-2)}});
    t.push_back({Rational(1), {Rational(-1, 3)}, {s * Rational(2)}});
    t.push_back({Rational(2), {Rational(-1, 3)}, {-s}});
    return t;
}

inline MultiSeries build_explicit(Group g, int order) {
    const auto vars = potential_variables(g);
    switch (g) {
        case Group::Z2xZ2: return expand_h_terms(z2z2_explicit_terms(), vars, order);
        case Group::A4: return expand_h_terms(a4_explicit_terms(), vars, order);
        case Group::S4: break;
    }
    throw UnsupportedGroup("build_explicit: s4 has no three-variable closed form here");
}

// (1/2)K(2u,v) + K(-u,v).
inline MultiSeries build_s4_section(int order) {
    const auto vars = potential_variables(Group::S4);
    std::vector<HTerm> terms;
    for (const auto& k : s4_kernel_terms()) {
        HTerm a = k;
        a.weight = k.weight / 2;
        a.linear[0] = k.linear[0] * Rational(2);
        terms.push_back(a);
        HTerm b = k;
        b.linear[0] = -k.linear[0];
        terms.push_back(b);
    }
    return expand_h_terms(terms, vars, order);
}

// The root-system form: F_G = (1/2) sum over positive roots alpha of
//   h(pi + sum_rho alpha^rho (2 pi dim(rho)/|G| + sum_i L[i][rho] x_i)).
// Phases stay exact rationals (reduced mod 2); roots supported only on
// black nodes have a vanishing linear form and contribute nothing.
inline MultiSeries build_root_system_form(Group g, int order, bool swap_e6_ends = false) {
    if (g == Group::S4) throw UnsupportedGroup("root system form needs a Thm-1 group");
    const GroupData& gd = group_table(g);
    const auto L = l_matrix(gd);
    const RootSystemData rs =
        positive_roots(g == Group::Z2xZ2 ? RootSystem::D4 : RootSystem::E6, swap_e6_ends);
    const auto vars = potential_variables(g);
    const int nvars = static_cast<int>(vars.size());

    MultiSeries out(vars, order);
    for (const auto& alpha : rs.positive_roots) {
        Rational theta(1);
        std::vector<CycNumber> linear(static_cast<std::size_t>(nvars));
        for (std::size_t w = 0; w < rs.white_nodes.size(); ++w) {
            const int coeff = alpha[static_cast<std::size_t>(rs.white_nodes[w])];
            if (coeff == 0) continue;
            const int rho = rs.irrep_of_white[w];  // nontrivial irrep index
            theta += Rational(2L * coeff * gd.dims[static_cast<std::size_t>(rho)], gd.order());
            for (int i = 0; i < nvars; ++i)
                linear[static_cast<std::size_t>(i)] +=
                    L[static_cast<std::size_t>(i)][static_cast<std::size_t>(rho - 1)] * Rational(coeff);
        }
        // h-derivatives have period 2 pi.
        BigInt tn = boost::multiprecision::numerator(theta);
        BigInt td = boost::multiprecision::denominator(theta);
        tn %= 2 * td;
        theta = Rational(tn, td);
        out += expand_h_term({Rational(1), {theta}, linear}, vars, order);
    }
    return out * Rational(1, 2);
}

// Linear specialization of a potential, e.g. (x1,x2,x3) -> (x,x,x).
inline MultiSeries specialize(const MultiSeries& s, const std::vector<std::string>& new_vars,
                              const std::vector<std::vector<CycNumber>>& map) {
    return s.linear_substitute(new_vars, map);
}

inline std::vector<std::vector<CycNumber>> diagonal_map(int nold) {
    std::vector<std::vector<CycNumber>> m(static_cast<std::size_t>(nold),
                                          std::vector<CycNumber>{CycNumber::one()});
    return m;
}

// All integrals of length 3..order from a potential series: coefficient
// times factorials, checked rational, checked against the monodromy
// vanishing criterion.
inline HurwitzTable extract_table(const MultiSeries& s, Group g) {
    HurwitzTable t;
    t.group = g;
    t.order = s.order();
    const GroupData& gd = group_table(g);
    const int nvars = s.nvars();

    auto full_exponents = [&](const std::vector<int>& exp) {
        if (g != Group::S4) return exp;
        // The (u,v) section corresponds to (sigma, zeta) insertions.
        return std::vector<int>{0, exp[0], 0, exp[1]};
    };

    std::vector<int> exp(static_cast<std::size_t>(nvars), 0);
    const std::function<void(int, int)> walk = [&](int pos, int remaining) {
        if (pos == nvars - 1) {
            exp[static_cast<std::size_t>(pos)] = remaining;
            if (total_degree(exp) >= 3) {
                const Rational v = s.integral_coefficient(exp);
                if (monodromy_vanishes(gd, full_exponents(exp)) && v != 0)
                    throw Error("monodromy-forbidden entry is nonzero");
                t.entries[exp] = v;
            }
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exp[static_cast<std::size_t>(pos)] = e;
            walk(pos + 1, remaining - e);
        }
    };
    for (int n = 3; n <= s.order(); ++n) walk(0, n);
    return t;
}

}  // namespace hhodge
