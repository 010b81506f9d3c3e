#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <hhodge/cyclotomic.hpp>
#include <hhodge/errors.hpp>
#include <hhodge/rational.hpp>

namespace hhodge {

enum class Group { Z2xZ2, A4, S4 };

inline std::string group_token(Group g) {
    switch (g) {
        case Group::Z2xZ2: return "z2z2";
        case Group::A4: return "a4";
        case Group::S4: return "s4";
    }
    return "?";
}

// Permutations of {0,1,2,3}; composition applies the right factor first.
using Perm = std::array<int, 4>;

inline Perm perm_identity() { return {0, 1, 2, 3}; }
inline Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r;
    for (int x = 0; x < 4; ++x) r[static_cast<std::size_t>(x)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(x)])];
    return r;
}
inline Perm perm_inverse(const Perm& a) {
    Perm r;
    for (int x = 0; x < 4; ++x) r[static_cast<std::size_t>(a[static_cast<std::size_t>(x)])] = x;
    return r;
}
inline int perm_sign(const Perm& a) {
    int s = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (a[static_cast<std::size_t>(i)] > a[static_cast<std::size_t>(j)]) s = -s;
    return s;
}
inline int perm_fixed(const Perm& a) {
    int f = 0;
    for (int x = 0; x < 4; ++x)
        if (a[static_cast<std::size_t>(x)] == x) ++f;
    return f;
}

// Conjugacy classes, centralizer orders, character table (rows = irreps,
// columns = classes), the SO(3) character chi_V, and the inverse-class
// involution for one of the three groups. Class order follows the fixed
// naming convention; characters are computed from explicit realizations
// (kernels, abelianization cosets, point actions) rather than copied in.
struct GroupData {
    Group name;
    std::vector<Perm> elements;
    int nclasses = 0;
    std::vector<Perm> class_rep;
    std::vector<std::vector<Perm>> class_members;
    std::vector<int> z;              // centralizer orders
    std::vector<int> inverse_class;  // j -> class of inverses
    std::vector<std::string> class_token;
    std::vector<std::vector<CycNumber>> char_table;  // [irrep][class]
    std::vector<int> dims;
    std::vector<CycNumber> chi_V;  // per class
    std::vector<Rational> tp_tensor;  // [c1*n^2 + c2*n + c3] covering counts

    int order() const { return static_cast<int>(elements.size()); }
    int nontrivial_classes() const { return nclasses - 1; }

    int class_of(const Perm& p) const {
        for (int c = 0; c < nclasses; ++c)
            for (const auto& m : class_members[static_cast<std::size_t>(c)])
                if (m == p) return c;
        throw Error("element not in group");
    }

    int class_index(const std::string& token) const {
        for (int c = 0; c < nclasses; ++c)
            if (class_token[static_cast<std::size_t>(c)] == token) return c;
        throw Error("unknown class token '" + token + "' for group " + group_token(name));
    }
};

namespace detail {

inline std::vector<Perm> all_perms() {
    std::array<int, 4> base{0, 1, 2, 3};
    std::vector<Perm> out;
    std::sort(base.begin(), base.end());
    do out.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    return out;
}

inline Perm cycle2(int a, int b) {
    Perm p = perm_identity();
    std::swap(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]);
    return p;
}
inline Perm double_cycle(int a, int b, int c, int d) {
    return perm_compose(cycle2(a, b), cycle2(c, d));
}
inline Perm cycle3(int a, int b, int c) {
    Perm p = perm_identity();
    p[static_cast<std::size_t>(a)] = b;
    p[static_cast<std::size_t>(b)] = c;
    p[static_cast<std::size_t>(c)] = a;
    return p;
}
inline Perm cycle4(int a, int b, int c, int d) {
    Perm p = perm_identity();
    p[static_cast<std::size_t>(a)] = b;
    p[static_cast<std::size_t>(b)] = c;
    p[static_cast<std::size_t>(c)] = d;
    p[static_cast<std::size_t>(d)] = a;
    return p;
}

// The three fixed-point-free involutions acting on the unordered pairings
// {01|23},{02|13},{03|12}: needed for the 2-dimensional character of S4.
inline int pairing_fixed(const Perm& g) {
    static const std::array<std::array<std::array<int, 2>, 2>, 3> pairings{{
        {{{0, 1}, {2, 3}}},
        {{{0, 2}, {1, 3}}},
        {{{0, 3}, {1, 2}}},
    }};
    auto pair_key = [](int a, int b) { return a < b ? a * 4 + b : b * 4 + a; };
    int fixed = 0;
    for (const auto& p : pairings) {
        std::set<int> before, after;
        for (const auto& pr : p) {
            before.insert(pair_key(pr[0], pr[1]));
            after.insert(pair_key(g[static_cast<std::size_t>(pr[0])], g[static_cast<std::size_t>(pr[1])]));
        }
        if (before == after) ++fixed;
    }
    return fixed;
}

inline GroupData build_group(Group name) {
    GroupData g;
    g.name = name;

    std::vector<Perm> reps;
    switch (name) {
        case Group::S4:
            g.elements = all_perms();
            reps = {perm_identity(), cycle2(0, 1), cycle3(0, 1, 2), cycle4(0, 1, 2, 3),
                    double_cycle(0, 1, 2, 3)};
            g.class_token = {"one", "tau", "sigma", "rho", "zeta"};
            break;
        case Group::A4:
            for (const auto& p : all_perms())
                if (perm_sign(p) == 1) g.elements.push_back(p);
            reps = {perm_identity(), cycle3(0, 1, 2), cycle3(0, 2, 1), double_cycle(0, 1, 2, 3)};
            g.class_token = {"one", "s1", "s2", "zeta"};
            break;
        case Group::Z2xZ2:
            g.elements = {perm_identity(), double_cycle(0, 1, 2, 3), double_cycle(0, 2, 1, 3),
                          double_cycle(0, 3, 1, 2)};
            reps = g.elements;
            g.class_token = {"one", "z1", "z2", "z3"};
            break;
    }

    g.nclasses = static_cast<int>(reps.size());
    g.class_rep = reps;
    for (const auto& rep : reps) {
        std::set<Perm> orbit;
        for (const auto& h : g.elements)
            orbit.insert(perm_compose(perm_compose(h, rep), perm_inverse(h)));
        g.class_members.emplace_back(orbit.begin(), orbit.end());
    }
    for (int c = 0; c < g.nclasses; ++c)
        g.z.push_back(g.order() / static_cast<int>(g.class_members[static_cast<std::size_t>(c)].size()));
    for (int c = 0; c < g.nclasses; ++c)
        g.inverse_class.push_back(g.class_of(perm_inverse(g.class_rep[static_cast<std::size_t>(c)])));

    // Covering-count tensor: (1/|G|) #{(g1,g2,g3) in c1 x c2 x c3 with
    // g1 g2 g3 = 1}, enumerated once.
    std::map<Perm, int> class_of_elem;
    for (int c = 0; c < g.nclasses; ++c)
        for (const auto& m : g.class_members[static_cast<std::size_t>(c)]) class_of_elem[m] = c;
    const int n = g.nclasses;
    g.tp_tensor.assign(static_cast<std::size_t>(n * n * n), Rational(0));
    for (int c1 = 0; c1 < n; ++c1)
        for (int c2 = 0; c2 < n; ++c2) {
            std::vector<long> counts(static_cast<std::size_t>(n), 0);
            for (const auto& a : g.class_members[static_cast<std::size_t>(c1)])
                for (const auto& b : g.class_members[static_cast<std::size_t>(c2)])
                    ++counts[static_cast<std::size_t>(
                        class_of_elem.at(perm_inverse(perm_compose(a, b))))];
            for (int c3 = 0; c3 < n; ++c3)
                g.tp_tensor[static_cast<std::size_t>((c1 * n + c2) * n + c3)] =
                    Rational(counts[static_cast<std::size_t>(c3)], g.order());
        }

    const CycNumber one = CycNumber::one();
    auto rat_row = [&](auto&& f) {
        std::vector<CycNumber> row;
        for (int c = 0; c < g.nclasses; ++c)
            row.push_back(CycNumber::from(Rational(f(g.class_rep[static_cast<std::size_t>(c)]))));
        return row;
    };

    std::vector<CycNumber> triv(static_cast<std::size_t>(g.nclasses), one);

    switch (name) {
        case Group::Z2xZ2: {
            // Nontrivial characters have two-element kernels <zeta_k>.
            g.char_table.push_back(triv);
            for (int k = 1; k < 4; ++k) {
                std::vector<CycNumber> row;
                for (int c = 0; c < g.nclasses; ++c) {
                    const bool in_kernel = c == 0 || c == k;
                    row.push_back(CycNumber::from_int(in_kernel ? 1 : -1));
                }
                g.char_table.push_back(row);
            }
            g.dims = {1, 1, 1, 1};
            for (int c = 0; c < g.nclasses; ++c) {
                CycNumber v;
                for (int k = 1; k < 4; ++k) v += g.char_table[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                g.chi_V.push_back(v);
            }
            break;
        }
        case Group::A4: {
            // Commutator subgroup by closure; the two nontrivial linear
            // characters factor through the Z3 quotient.
            std::set<Perm> comm{perm_identity()};
            bool grew = true;
            while (grew) {
                grew = false;
                std::set<Perm> next = comm;
                for (const auto& a : g.elements)
                    for (const auto& b : g.elements) {
                        Perm c = perm_compose(perm_compose(a, b),
                                              perm_compose(perm_inverse(a), perm_inverse(b)));
                        next.insert(c);
                    }
                for (const auto& a : next)
                    for (const auto& b : next) next.insert(perm_compose(a, b));
                if (next != comm) {
                    comm = next;
                    grew = true;
                }
            }
            // Coset exponent: gen = a 3-cycle generates the quotient.
            const Perm gen = cycle3(0, 1, 2);
            auto coset_exp = [&](const Perm& p) {
                Perm q = p;
                for (int e = 0; e < 3; ++e) {
                    if (comm.count(q)) return e;
                    q = perm_compose(q, perm_inverse(gen));
                }
                throw Error("A4 abelianization failed");
            };
            g.char_table.push_back(triv);
            for (int power : {1, 2}) {
                std::vector<CycNumber> row;
                for (int c = 0; c < g.nclasses; ++c) {
                    int e = (coset_exp(g.class_rep[static_cast<std::size_t>(c)]) * power) % 3;
                    row.push_back(CycNumber::zeta_pow(8L * e));  // omega^e
                }
                g.char_table.push_back(row);
            }
            g.char_table.push_back(rat_row([](const Perm& p) { return perm_fixed(p) - 1; }));
            g.dims = {1, 1, 1, 3};
            for (int c = 0; c < g.nclasses; ++c) g.chi_V.push_back(g.char_table[3][static_cast<std::size_t>(c)]);
            break;
        }
        case Group::S4: {
            g.char_table.push_back(triv);
            g.char_table.push_back(rat_row([](const Perm& p) { return perm_sign(p); }));
            g.char_table.push_back(rat_row([](const Perm& p) { return pairing_fixed(p) - 1; }));
            // The SO(3) representation of S4 (rotation group of the cube)
            // is standard tensor sign.
            g.char_table.push_back(
                rat_row([](const Perm& p) { return (perm_fixed(p) - 1) * perm_sign(p); }));
            g.char_table.push_back(rat_row([](const Perm& p) { return perm_fixed(p) - 1; }));
            g.dims = {1, 1, 2, 3, 3};
            for (int c = 0; c < g.nclasses; ++c) g.chi_V.push_back(g.char_table[3][static_cast<std::size_t>(c)]);
            break;
        }
    }
    return g;
}

}  // namespace detail

inline const GroupData& group_table(Group name) {
    static const GroupData z2z2 = detail::build_group(Group::Z2xZ2);
    static const GroupData a4 = detail::build_group(Group::A4);
    static const GroupData s4 = detail::build_group(Group::S4);
    switch (name) {
        case Group::Z2xZ2: return z2z2;
        case Group::A4: return a4;
        case Group::S4: return s4;
    }
    throw Error("unknown group");
}

// (1/|G|) #{(g1,g2,g3) in c1 x c2 x c3 : g1 g2 g3 = 1}; enumerated once at
// group construction.
inline Rational three_point(const GroupData& g, int c1, int c2, int c3) {
    const int n = g.nclasses;
    return g.tp_tensor[static_cast<std::size_t>((c1 * n + c2) * n + c3)];
}

// True when the insertions cannot multiply to the identity for abelianization
// reasons: some linear character evaluates the product to a nontrivial root
// of unity. Exponents may be over all classes or only the nontrivial ones.
inline bool monodromy_vanishes(const GroupData& g, const std::vector<int>& exps) {
    const int offset = static_cast<int>(exps.size()) == g.nclasses ? 0 : 1;
    if (static_cast<int>(exps.size()) + offset != g.nclasses && offset == 1)
        throw Error("bad exponent arity in monodromy_vanishes");
    for (std::size_t r = 0; r < g.char_table.size(); ++r) {
        if (g.dims[r] != 1) continue;
        CycNumber prod = CycNumber::one();
        for (std::size_t c = 0; c < exps.size(); ++c) {
            const auto& chi = g.char_table[r][c + static_cast<std::size_t>(offset)];
            for (int k = 0; k < exps[c]; ++k) prod *= chi;
        }
        if (prod != CycNumber::one()) return true;
    }
    return false;
}

// L over nontrivial classes i and nontrivial irreps rho:
//   L[i][rho] = (1/z_i) sqrt(3 - chi_V(i)) chi_rho(i).
inline std::vector<std::vector<CycNumber>> l_matrix(const GroupData& g) {
    if (g.name == Group::S4) throw UnsupportedGroup("s4");
    std::vector<std::vector<CycNumber>> L;
    for (int i = 1; i < g.nclasses; ++i) {
        const CycNumber surd = cyc_sqrt(Rational(3) - g.chi_V[static_cast<std::size_t>(i)].as_rational());
        std::vector<CycNumber> row;
        for (int r = 1; r < g.nclasses; ++r)
            row.push_back(surd * g.char_table[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] * Rational(1, g.z[static_cast<std::size_t>(i)]));
        L.push_back(std::move(row));
    }
    return L;
}

}  // namespace hhodge
