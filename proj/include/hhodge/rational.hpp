#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include <hhodge/errors.hpp>

namespace hhodge {

// Arbitrary-precision exact rational. cpp_rational keeps values in lowest
// terms with positive denominator, which is exactly the invariant we need.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational rational_from_string(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw Error("cannot parse rational: '" + s + "'");
    }
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);
    }
    return b;
}

// n! / (e_1! e_2! ... e_m!) with n = sum of exponents.
inline BigInt multinomial(const std::vector<int>& exps) {
    unsigned n = 0;
    for (int e : exps) n += static_cast<unsigned>(e);
    BigInt m = factorial(n);
    for (int e : exps) m /= factorial(static_cast<unsigned>(e));
    return m;
}

}  // namespace hhodge
