#pragma once

#include <map>
#include <string>
#include <vector>

#include <hhodge/cyclotomic.hpp>
#include <hhodge/errors.hpp>
#include <hhodge/rational.hpp>
#include <hhodge/ratseries.hpp>
#include <hhodge/series.hpp>

namespace hhodge {

// Expansion point theta*pi of the universal series h, kept as an exact
// rational multiple of pi. Only tan(-theta*pi/2) ever needs evaluating, so
// pi itself never enters the coefficient field.
struct Phase {
    Rational theta;
};

// P_n with d^n/du^n tan(u) = P_n(tan u); P_0 = t, P_{k+1} = P_k'(t)(1+t^2).
// Returned as coefficients of powers of t.
inline std::vector<Rational> tan_derivative_polynomial(int n) {
    std::vector<Rational> p{0, 1};
    for (int k = 0; k < n; ++k) {
        std::vector<Rational> d(p.size() >= 2 ? p.size() - 1 : 1, Rational(0));
        for (std::size_t j = 1; j < p.size(); ++j) d[j - 1] = p[j] * Rational(j);
        std::vector<Rational> next(d.size() + 2, Rational(0));
        for (std::size_t j = 0; j < d.size(); ++j) {
            next[j] += d[j];
            next[j + 2] += d[j];
        }
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        p = std::move(next);
    }
    return p;
}

inline CycNumber eval_poly(const std::vector<Rational>& p, const CycNumber& t) {
    CycNumber r;
    for (std::size_t j = p.size(); j-- > 0;) r = r * t + CycNumber::from(p[j]);
    return r;
}

// Exact tan(angle*pi). The angle must reduce to a denominator dividing 12
// so that e^{i angle pi} is a power of zeta24.
inline CycNumber tan_at(const Rational& angle_in_pi) {
    // tan has period pi: reduce the multiplier mod 1.
    BigInt num = boost::multiprecision::numerator(angle_in_pi);
    BigInt den = boost::multiprecision::denominator(angle_in_pi);
    num %= den;
    if (BigInt(12) % den != 0)
        throw UnsupportedAngle(to_string(angle_in_pi) + " * pi");
    const long k = static_cast<long>(num * (BigInt(12) / den));
    const CycNumber z = CycNumber::zeta_pow(k);
    const CycNumber zi = CycNumber::zeta_pow(-k);
    const CycNumber two_cos = z + zi;
    if (two_cos.is_zero()) throw PoleError("tan(" + to_string(angle_in_pi) + " * pi)");
    const CycNumber tan = (z - zi) * (CycNumber::i_unit() * two_cos).inverse();
    if (!tan.is_real())
        throw Error("tan value not real at " + to_string(angle_in_pi) + " * pi");
    return tan;
}

// h is defined by h'''(u) = (1/2) tan(-u/2); orders below three are not
// defined. h^(n)(theta*pi) = (1/2) (-1/2)^{n-3} P_{n-3}(tan(-theta*pi/2)).
inline CycNumber h_derivative_at(int n, const Phase& phase) {
    if (n < 3) throw Error("h derivative order below 3");
    const CycNumber t = tan_at(-phase.theta / 2);
    CycNumber v = eval_poly(tan_derivative_polynomial(n - 3), t) * Rational(1, 2);
    Rational scale(1);
    for (int k = 0; k < n - 3; ++k) scale *= Rational(-1, 2);
    return v * scale;
}

// One summand weight * h(theta*pi + l(x)) of a potential, with l a linear
// form in the series variables. A term whose linear form vanishes
// identically contributes nothing: h carries no content below degree three.
struct HTerm {
    Rational weight;
    Phase phase;
    std::vector<CycNumber> linear;
};

inline MultiSeries expand_h_term(const HTerm& term, const std::vector<std::string>& vars,
                                 int order) {
    MultiSeries out(vars, order);
    if (term.linear.size() != vars.size())
        throw VariableMismatch("h-term linear form arity");
    bool all_zero = true;
    for (const auto& c : term.linear)
        if (!c.is_zero()) all_zero = false;
    if (all_zero || order < 3) return out;

    MultiSeries l(vars, order);
    for (std::size_t j = 0; j < vars.size(); ++j) {
        std::vector<int> e(vars.size(), 0);
        e[j] = 1;
        l.add_term(e, term.linear[j]);
    }
    MultiSeries lpow = l * l * l;
    Rational nfact = factorial(3);
    for (int n = 3; n <= order; ++n) {
        const CycNumber hn = h_derivative_at(n, term.phase) * (term.weight / nfact);
        out += lpow * hn;
        if (n < order) {
            lpow = lpow * l;
            nfact *= n + 1;
        }
    }
    return out;
}

inline MultiSeries expand_h_terms(const std::vector<HTerm>& terms,
                                  const std::vector<std::string>& vars, int order) {
    MultiSeries out(vars, order);
    for (const auto& t : terms) out += expand_h_term(t, vars, order);
    return out;
}

// Values <zeta_1^n> for Z2xZ2: (n-3)! times the u^{n-3} coefficient of
// (1/2) tan(-u/2) for even n >= 4, zero otherwise.
inline std::map<int, Rational> fp_tangent_series(int N) {
    std::map<int, Rational> out;
    const RatSeries t = tangent_series(std::max(0, N - 3));
    for (int n = 0; n <= N; ++n) {
        Rational v(0);
        if (n >= 4 && n % 2 == 0) {
            Rational half_pow(1);  // (-1/2)^{n-3} from tan(-u/2), times 1/2
            for (int k = 0; k < n - 3; ++k) half_pow *= Rational(-1, 2);
            v = t[n - 3] * half_pow * Rational(1, 2) * Rational(factorial(static_cast<unsigned>(n - 3)));
        }
        out[n] = v;
    }
    return out;
}

}  // namespace hhodge
