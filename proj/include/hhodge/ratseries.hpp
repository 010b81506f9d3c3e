#pragma once

#include <vector>

#include <hhodge/errors.hpp>
#include <hhodge/rational.hpp>

namespace hhodge {

// Truncated univariate power series over Q, coefficient of u^k at index k.
// All series in one expression are expected to share the truncation order.
class RatSeries {
  public:
    explicit RatSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    Rational& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    friend RatSeries operator+(const RatSeries& a, const RatSeries& b) {
        RatSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
        return r;
    }
    friend RatSeries operator-(const RatSeries& a, const RatSeries& b) {
        RatSeries r(std::min(a.order(), b.order()));
        for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
        return r;
    }
    friend RatSeries operator*(const RatSeries& a, const RatSeries& b) {
        RatSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; i + j <= r.order(); ++j) {
                if (b[j] == 0) continue;
                r[i + j] += a[i] * b[j];
            }
        }
        return r;
    }
    friend RatSeries operator*(const RatSeries& a, const Rational& s) {
        RatSeries r(a.order());
        for (int k = 0; k <= r.order(); ++k) r[k] = a[k] * s;
        return r;
    }

    RatSeries& operator+=(const RatSeries& b) { return *this = *this + b; }
    RatSeries& operator-=(const RatSeries& b) { return *this = *this - b; }

    friend bool operator==(const RatSeries& a, const RatSeries& b) { return a.c_ == b.c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    RatSeries derivative() const {
        RatSeries r(order() - 1);
        for (int k = 0; k <= r.order(); ++k) r[k] = c_[static_cast<std::size_t>(k) + 1] * Rational(k + 1);
        return r;
    }

    RatSeries truncated(int order) const {
        RatSeries r(order);
        for (int k = 0; k <= std::min(order, this->order()); ++k) r[k] = c_[static_cast<std::size_t>(k)];
        return r;
    }

    static RatSeries constant(const Rational& v, int order) {
        RatSeries r(order);
        r[0] = v;
        return r;
    }

  private:
    std::vector<Rational> c_;
};

// Multiplicative inverse; the constant term must be nonzero.
inline RatSeries series_inverse(const RatSeries& f) {
    if (f[0] == 0) throw Error("series inverse needs a unit constant term");
    RatSeries g(f.order());
    g[0] = Rational(1) / f[0];
    for (int k = 1; k <= f.order(); ++k) {
        Rational s(0);
        for (int i = 1; i <= k; ++i) s += f[i] * g[k - i];
        g[k] = -s / f[0];
    }
    return g;
}

// Square root with the branch fixed by the given constant term (anchor^2
// must equal f[0]).
inline RatSeries series_sqrt(const RatSeries& f, const Rational& anchor) {
    if (anchor * anchor != f[0]) throw Error("series sqrt anchor does not square to f(0)");
    if (anchor == 0) throw Error("series sqrt needs a nonzero anchor");
    RatSeries g(f.order());
    g[0] = anchor;
    for (int k = 1; k <= f.order(); ++k) {
        Rational s(0);
        for (int i = 1; i <= k - 1; ++i) s += g[i] * g[k - i];
        g[k] = (f[k] - s) / (Rational(2) * anchor);
    }
    return g;
}

// Maclaurin series of tan through u^N, generated from the ODE t' = 1 + t^2.
inline RatSeries tangent_series(int N) {
    RatSeries t(N);
    for (int k = 0; k + 1 <= N; ++k) {
        Rational s = (k == 0) ? Rational(1) : Rational(0);
        for (int i = 1; i <= k - 1; ++i) s += t[i] * t[k - i];
        t[k + 1] = s / Rational(k + 1);
    }
    return t;
}

}  // namespace hhodge
