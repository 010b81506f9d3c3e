#pragma once

#include <array>
#include <cstdlib>
#include <string>
#include <vector>

#include <hhodge/errors.hpp>
#include <hhodge/linalg.hpp>
#include <hhodge/rational.hpp>

namespace hhodge {

// Element of Q(zeta) with zeta a primitive 24th root of unity, stored as
// rational coordinates in the power basis {zeta^0, ..., zeta^7} and reduced
// modulo the minimal polynomial Phi_24(x) = x^8 - x^4 + 1. The reduction is
// canonical, so equality is coordinate equality. One fixed field is enough:
// it contains sqrt(2), sqrt(3), i, omega = e^{2 pi i/3} and the tangent of
// every multiple of pi/12 away from poles.
class CycNumber {
  public:
    static constexpr int degree = 8;

    CycNumber() = default;

    static CycNumber from(Rational r) {
        CycNumber x;
        x.c_[0] = std::move(r);
        return x;
    }
    static CycNumber from_int(long n) { return from(Rational(n)); }
    static CycNumber zero() { return CycNumber(); }
    static CycNumber one() { return from_int(1); }

    // zeta^k for any integer k, reduced to the power basis.
    static CycNumber zeta_pow(long k) {
        k %= 24;
        if (k < 0) k += 24;
        std::vector<Rational> p(static_cast<std::size_t>(k) + 1);
        p.back() = 1;
        return reduced(std::move(p));
    }

    static CycNumber i_unit() { return zeta_pow(6); }
    static CycNumber sqrt2() {
        // 2 cos(pi/4) = zeta^3 + zeta^21
        return zeta_pow(3) + zeta_pow(21);
    }
    static CycNumber sqrt3() {
        // 2 cos(pi/6) = zeta^2 + zeta^22
        return zeta_pow(2) + zeta_pow(22);
    }
    static CycNumber omega() { return zeta_pow(8); }       // e^{2 pi i/3}
    static CycNumber omega_bar() { return zeta_pow(16); }  // e^{-2 pi i/3}

    const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (int k = 1; k < degree; ++k)
            if (c_[static_cast<std::size_t>(k)] != 0) return false;
        return true;
    }

    Rational as_rational() const {
        if (!is_rational()) throw NotRational(str());
        return c_[0];
    }

    // Complex conjugation: zeta -> zeta^{-1}.
    CycNumber conj() const {
        CycNumber r;
        for (int k = 0; k < degree; ++k) {
            if (c_[static_cast<std::size_t>(k)] == 0) continue;
            r += zeta_pow(24 - k) * c_[static_cast<std::size_t>(k)];
        }
        return r;
    }

    bool is_real() const { return conj() == *this; }

    friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
        CycNumber r;
        for (std::size_t k = 0; k < degree; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b) {
        CycNumber r;
        for (std::size_t k = 0; k < degree; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend CycNumber operator-(const CycNumber& a) {
        CycNumber r;
        for (std::size_t k = 0; k < degree; ++k) r.c_[k] = -a.c_[k];
        return r;
    }
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
        std::vector<Rational> p(2 * degree - 1);
        for (std::size_t i = 0; i < degree; ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < degree; ++j) {
                if (b.c_[j] == 0) continue;
                p[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return reduced(std::move(p));
    }
    friend CycNumber operator*(const CycNumber& a, const Rational& s) {
        CycNumber r;
        for (std::size_t k = 0; k < degree; ++k) r.c_[k] = a.c_[k] * s;
        return r;
    }
    friend CycNumber operator*(const Rational& s, const CycNumber& a) { return a * s; }

    CycNumber& operator+=(const CycNumber& b) { return *this = *this + b; }
    CycNumber& operator-=(const CycNumber& b) { return *this = *this - b; }
    CycNumber& operator*=(const CycNumber& b) { return *this = *this * b; }

    friend bool operator==(const CycNumber& a, const CycNumber& b) { return a.c_ == b.c_; }
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    // Multiplicative inverse, by solving the 8x8 rational system for
    // multiplication by *this.
    CycNumber inverse() const {
        if (is_zero()) throw DivisionByZero();
        LinearSystem<Rational> sys(degree);
        std::array<CycNumber, degree> cols;
        for (int j = 0; j < degree; ++j) cols[static_cast<std::size_t>(j)] = *this * zeta_pow(j);
        for (int row = 0; row < degree; ++row) {
            std::vector<Rational> lhs(degree);
            for (int j = 0; j < degree; ++j) lhs[static_cast<std::size_t>(j)] = cols[static_cast<std::size_t>(j)].coeff(row);
            sys.add_row(std::move(lhs), row == 0 ? Rational(1) : Rational(0));
        }
        auto x = sys.solve("cyclotomic inverse");
        CycNumber r;
        for (int k = 0; k < degree; ++k) r.c_[static_cast<std::size_t>(k)] = x[static_cast<std::size_t>(k)];
        return r;
    }

    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }

    std::string str() const {
        std::string s = "[";
        for (int k = 0; k < degree; ++k) {
            if (k) s += ",";
            s += to_string(c_[static_cast<std::size_t>(k)]);
        }
        return s + "]";
    }

    std::array<std::string, degree> coeff_strings() const {
        std::array<std::string, degree> a;
        for (int k = 0; k < degree; ++k) a[static_cast<std::size_t>(k)] = to_string(c_[static_cast<std::size_t>(k)]);
        return a;
    }

  private:
    // zeta^8 = zeta^4 - 1, applied top-down.
    static CycNumber reduced(std::vector<Rational> p) {
        for (std::size_t m = p.size(); m-- > degree;) {
            if (p[m] == 0) continue;
            p[m - 4] += p[m];
            p[m - 8] -= p[m];
            p[m] = 0;
        }
        CycNumber r;
        for (std::size_t k = 0; k < degree && k < p.size(); ++k) r.c_[k] = std::move(p[k]);
        return r;
    }

    std::array<Rational, degree> c_{};
};

// Exact square root of a nonnegative rational whose squarefree part divides
// 6, as an element of Q(zeta24). Covers every sqrt(3 - chi_V) the group
// data needs.
inline CycNumber cyc_sqrt(const Rational& r) {
    if (r < 0) throw Error("cyc_sqrt of negative rational");
    if (r == 0) return CycNumber::zero();
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    // sqrt(n/d) = sqrt(n d)/d
    BigInt nd = num * den;
    BigInt square = 1, free = 1;
    for (BigInt f = 2; f * f <= nd; ++f) {
        while (nd % (f * f) == 0) {
            nd /= f * f;
            square *= f;
        }
        while (nd % f == 0) {
            nd /= f;
            free *= f;
        }
    }
    free *= nd;
    CycNumber surd;
    if (free == 1)
        surd = CycNumber::one();
    else if (free == 2)
        surd = CycNumber::sqrt2();
    else if (free == 3)
        surd = CycNumber::sqrt3();
    else if (free == 6)
        surd = CycNumber::sqrt2() * CycNumber::sqrt3();
    else
        throw Error("square root not in Q(zeta24): " + to_string(r));
    return surd * Rational(square, den);
}

}  // namespace hhodge
