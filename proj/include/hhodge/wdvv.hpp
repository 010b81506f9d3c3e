#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <hhodge/groups.hpp>
#include <hhodge/potentials.hpp>
#include <hhodge/series.hpp>

namespace hhodge {

// One bilinear term z(g) <c_I a_i a_j (g)> <(g^-1) a_k a_l c_{I^c}>, with the
// subset choice folded into a multinomial coefficient. Exponent vectors are
// over all classes, the trivial class first.
struct WdvvTerm {
    Rational coeff;
    std::vector<int> left;
    std::vector<int> right;
};

// The identity <base (a1 a2 | a3 a4)> = <base (a1 a3 | a2 a4)>, fully
// expanded over subsets of the base and middle classes.
struct WdvvIdentity {
    Group group;
    std::vector<int> base;       // exponents over nontrivial classes
    std::array<int, 4> quad;     // nontrivial class indices a1..a4
    std::vector<WdvvTerm> lhs;   // pairing (a1 a2 | a3 a4)
    std::vector<WdvvTerm> rhs;   // pairing (a1 a3 | a2 a4)
};

namespace detail {

inline void expand_pairing(const GroupData& g, const std::vector<int>& base, int p, int q,
                           int r, int s, bool drop_killed, std::vector<WdvvTerm>& out) {
    const int nontrivial = g.nontrivial_classes();
    std::vector<int> sub(static_cast<std::size_t>(nontrivial), 0);
    const std::function<void(int, Rational)> walk = [&](int pos, Rational multi) {
        if (pos == nontrivial) {
            for (int mid = 0; mid < g.nclasses; ++mid) {
                WdvvTerm t;
                t.coeff = multi * g.z[static_cast<std::size_t>(mid)];
                t.left.assign(static_cast<std::size_t>(g.nclasses), 0);
                t.right.assign(static_cast<std::size_t>(g.nclasses), 0);
                for (int c = 0; c < nontrivial; ++c) {
                    t.left[static_cast<std::size_t>(c) + 1] = sub[static_cast<std::size_t>(c)];
                    t.right[static_cast<std::size_t>(c) + 1] =
                        base[static_cast<std::size_t>(c)] - sub[static_cast<std::size_t>(c)];
                }
                t.left[static_cast<std::size_t>(p)] += 1;
                t.left[static_cast<std::size_t>(q)] += 1;
                t.left[static_cast<std::size_t>(mid)] += 1;
                t.right[static_cast<std::size_t>(r)] += 1;
                t.right[static_cast<std::size_t>(s)] += 1;
                t.right[static_cast<std::size_t>(g.inverse_class[static_cast<std::size_t>(mid)])] += 1;
                if (drop_killed &&
                    (monodromy_vanishes(g, t.left) || monodromy_vanishes(g, t.right)))
                    continue;
                out.push_back(std::move(t));
            }
            return;
        }
        for (int k = 0; k <= base[static_cast<std::size_t>(pos)]; ++k) {
            sub[static_cast<std::size_t>(pos)] = k;
            walk(pos + 1,
                 multi * Rational(binomial(static_cast<unsigned>(base[static_cast<std::size_t>(pos)]),
                                           static_cast<unsigned>(k))));
        }
    };
    walk(0, Rational(1));
}

}  // namespace detail

// quad holds nontrivial class indices (a1,a2,a3,a4); the identity equates
// the pairings (a1 a2 | a3 a4) and (a1 a3 | a2 a4). By default, terms
// killed by the monodromy criterion are dropped as they are generated.
// The inductive solvers generate with drop_killed = false: terms pairing a
// monodromy-forbidden unknown with a nonzero covering count are exactly
// what forces the forbidden entries to vanish without imposing the
// criterion as an equation.
inline WdvvIdentity generate_identity(const GroupData& g, const std::vector<int>& base,
                                      const std::array<int, 4>& quad, bool drop_killed = true) {
    WdvvIdentity id;
    id.group = g.name;
    id.base = base;
    id.quad = quad;
    detail::expand_pairing(g, base, quad[0], quad[1], quad[2], quad[3], drop_killed, id.lhs);
    detail::expand_pairing(g, base, quad[0], quad[2], quad[1], quad[3], drop_killed, id.rhs);
    return id;
}

// Supplies integral values for exponent vectors over all classes (trivial
// class first). Entries with a trivial insertion are confined to length
// three, where they are plain covering counts; longer ones vanish.
class ValueOracle {
  public:
    explicit ValueOracle(const GroupData& g) : group_(g) {}
    virtual ~ValueOracle() = default;

    const GroupData& group() const { return group_; }

    Rational value(const std::vector<int>& full) const {
        const int length = total_degree(full);
        if (length < 3) return Rational(0);
        if (full[0] > 0) {
            if (length > 3) return Rational(0);
            std::vector<int> ins;
            for (std::size_t c = 0; c < full.size(); ++c)
                for (int k = 0; k < full[c]; ++k) ins.push_back(static_cast<int>(c));
            return three_point(group_, ins[0], ins[1], ins[2]);
        }
        return nontrivial_value(std::vector<int>(full.begin() + 1, full.end()));
    }

  protected:
    virtual Rational nontrivial_value(const std::vector<int>& exps) const = 0;

  private:
    const GroupData& group_;
};

class TableOracle : public ValueOracle {
  public:
    TableOracle(const GroupData& g, const HurwitzTable& t) : ValueOracle(g), table_(t) {}

  protected:
    Rational nontrivial_value(const std::vector<int>& exps) const override {
        if (total_degree(exps) == 3)
            return value_from_three_point(exps);
        return table_.at(exps);
    }

    Rational value_from_three_point(const std::vector<int>& exps) const {
        std::vector<int> ins;
        for (std::size_t c = 0; c < exps.size(); ++c)
            for (int k = 0; k < exps[c]; ++k) ins.push_back(static_cast<int>(c) + 1);
        return three_point(group(), ins[0], ins[1], ins[2]);
    }

  private:
    const HurwitzTable& table_;
};

inline Rational evaluate_identity(const WdvvIdentity& id, const ValueOracle& oracle) {
    Rational r(0);
    for (const auto& t : id.lhs) r += t.coeff * oracle.value(t.left) * oracle.value(t.right);
    for (const auto& t : id.rhs) r -= t.coeff * oracle.value(t.left) * oracle.value(t.right);
    return r;
}

// Every identity whose referenced entries have length at most max_length:
// all bases, all quadruple multisets, all distinct splittings into pairs.
inline std::vector<WdvvIdentity> all_identities(const GroupData& g, int max_length) {
    std::vector<WdvvIdentity> out;
    const int nontrivial = g.nontrivial_classes();

    std::vector<std::vector<int>> bases;
    std::vector<int> base(static_cast<std::size_t>(nontrivial), 0);
    const std::function<void(int, int)> walk = [&](int pos, int remaining) {
        if (pos == nontrivial - 1) {
            base[static_cast<std::size_t>(pos)] = remaining;
            bases.push_back(base);
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            base[static_cast<std::size_t>(pos)] = k;
            walk(pos + 1, remaining - k);
        }
    };
    for (int blen = 0; blen + 3 <= max_length; ++blen) walk(0, blen);

    // Quadruple multisets over nontrivial classes.
    for (int a = 1; a <= nontrivial; ++a)
        for (int b = a; b <= nontrivial; ++b)
            for (int c = b; c <= nontrivial; ++c)
                for (int d = c; d <= nontrivial; ++d) {
                    const std::array<std::array<int, 4>, 3> splits{{
                        {{a, b, c, d}},  // (ab|cd) vs (ac|bd)
                        {{a, b, d, c}},  // (ab|cd) vs (ad|bc)
                        {{a, c, d, b}},  // (ac|bd) vs (ad|bc)
                    }};
                    auto canon = [](int p, int q, int r, int s) {
                        std::array<int, 2> x{std::min(p, q), std::max(p, q)};
                        std::array<int, 2> y{std::min(r, s), std::max(r, s)};
                        return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
                    };
                    std::set<std::pair<std::pair<std::array<int, 2>, std::array<int, 2>>,
                                       std::pair<std::array<int, 2>, std::array<int, 2>>>>
                        seen;
                    for (const auto& q : splits) {
                        const auto lhs = canon(q[0], q[1], q[2], q[3]);
                        const auto rhs = canon(q[0], q[2], q[1], q[3]);
                        if (lhs == rhs) continue;
                        auto key = lhs < rhs ? std::make_pair(lhs, rhs) : std::make_pair(rhs, lhs);
                        if (!seen.insert(key).second) continue;
                        for (const auto& bs : bases) out.push_back(generate_identity(g, bs, q));
                    }
                }
    return out;
}

// The pairing-symmetry form of the associativity constraint: for a potential
// F over the nontrivial classes, the expression
//   g_ij g_nm |G| + sum_k F_ijk z_k F_{kbar n m}
// must be symmetric in (i,j,n,m). Checked for all index quadruples through
// the series truncation.
inline bool pairing_symmetry_check(const MultiSeries& f, const GroupData& g) {
    const int nv = f.nvars();
    std::vector<std::vector<std::vector<MultiSeries>>> third(
        static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) {
        third[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(nv));
        for (int j = 0; j < nv; ++j)
            for (int k = 0; k < nv; ++k)
                third[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(
                    f.derivative(i).derivative(j).derivative(k));
    }
    auto fijk = [&](int i, int j, int k) -> const MultiSeries& {
        return third[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    };
    auto metric = [&](int i, int j) {  // nontrivial-class metric
        return g.inverse_class[static_cast<std::size_t>(i) + 1] == j + 1
                   ? Rational(1, g.z[static_cast<std::size_t>(i) + 1])
                   : Rational(0);
    };
    // The expression depends only on the unordered pairs {i,j} and {n,m}.
    std::map<std::array<int, 4>, MultiSeries> memo;
    auto expression = [&](int i, int j, int n, int m) -> const MultiSeries& {
        const std::array<int, 4> key{std::min(i, j), std::max(i, j), std::min(n, m),
                                     std::max(n, m)};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        MultiSeries e(f.variables(), f.order() - 3);
        std::vector<int> zero(static_cast<std::size_t>(nv), 0);
        e.add_term(zero, CycNumber::from(metric(i, j) * metric(n, m) * g.order()));
        for (int k = 0; k < nv; ++k) {
            const int kbar = g.inverse_class[static_cast<std::size_t>(k) + 1] - 1;
            e += fijk(i, j, k) * fijk(kbar, n, m) * Rational(g.z[static_cast<std::size_t>(k) + 1]);
        }
        return memo.emplace(key, std::move(e)).first->second;
    };
    for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j)
            for (int n = j; n < nv; ++n)
                for (int m = n; m < nv; ++m) {
                    const MultiSeries& ref = expression(i, j, n, m);
                    std::array<int, 4> idx{i, j, n, m};
                    std::sort(idx.begin(), idx.end());
                    do {
                        if (!(expression(idx[0], idx[1], idx[2], idx[3]) == ref)) return false;
                    } while (std::next_permutation(idx.begin(), idx.end()));
                }
    return true;
}

// Associativity constraint for the two-variable S4 section. The constant
// is the trivial-middle-class count z(1) <sigma sigma 1><1 zeta zeta> = 1,
// entering with the sign of the (sigma sigma | zeta zeta) pairing:
//   3 T_uuv^2 + 8 T_uvv^2 - 3 T_uuu T_uvv - 8 T_uuv T_vvv - 1 = 0.
inline MultiSeries s4_pde_residual(const MultiSeries& t) {
    const MultiSeries tuuu = t.derivative(0).derivative(0).derivative(0);
    const MultiSeries tuuv = t.derivative(0).derivative(0).derivative(1);
    const MultiSeries tuvv = t.derivative(0).derivative(1).derivative(1);
    const MultiSeries tvvv = t.derivative(1).derivative(1).derivative(1);
    MultiSeries r = tuuv * tuuv * Rational(3) + tuvv * tuvv * Rational(8) -
                    tuuu * tuvv * Rational(3) - tuuv * tvvv * Rational(8);
    std::vector<int> zero(2, 0);
    r.add_term(zero, CycNumber::from_int(-1));
    return r;
}

inline bool s4_pde_check(const MultiSeries& t) { return s4_pde_residual(t).is_zero(); }

}  // namespace hhodge
