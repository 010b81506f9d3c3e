#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <hhodge/cyclotomic.hpp>
#include <hhodge/errors.hpp>
#include <hhodge/rational.hpp>

namespace hhodge {

inline int total_degree(const std::vector<int>& exp) {
    return std::accumulate(exp.begin(), exp.end(), 0);
}

// Truncated multivariate power series over Q(zeta24). Terms of total degree
// above the truncation order are dropped; every stored coefficient of degree
// <= order is exact. Coefficients are stored plain, i.e. a generating
// function's 1/n! factors are folded into the stored values.
class MultiSeries {
  public:
    MultiSeries(std::vector<std::string> vars, int order)
        : vars_(std::move(vars)), order_(order) {}

    const std::vector<std::string>& variables() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    int order() const { return order_; }
    const std::map<std::vector<int>, CycNumber>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    CycNumber coeff(const std::vector<int>& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? CycNumber::zero() : it->second;
    }

    void add_term(const std::vector<int>& exp, const CycNumber& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(exp.size()) != nvars())
            throw VariableMismatch("exponent arity " + std::to_string(exp.size()));
        if (total_degree(exp) > order_) return;
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
        MultiSeries r = a.compatible(b);
        r.terms_ = a.trimmed_terms(r.order_);
        for (const auto& [e, c] : b.terms_)
            if (total_degree(e) <= r.order_) r.add_term(e, c);
        return r;
    }

    friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) {
        MultiSeries r = a.compatible(b);
        r.terms_ = a.trimmed_terms(r.order_);
        for (const auto& [e, c] : b.terms_)
            if (total_degree(e) <= r.order_) r.add_term(e, -c);
        return r;
    }

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
        MultiSeries r = a.compatible(b);
        std::vector<int> e(static_cast<std::size_t>(a.nvars()));
        for (const auto& [ea, ca] : a.terms_) {
            const int da = total_degree(ea);
            if (da > r.order_) continue;
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) > r.order_) continue;
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend MultiSeries operator*(const MultiSeries& a, const CycNumber& s) {
        MultiSeries r(a.vars_, a.order_);
        if (s.is_zero()) return r;
        for (const auto& [e, c] : a.terms_) r.add_term(e, c * s);
        return r;
    }
    friend MultiSeries operator*(const MultiSeries& a, const Rational& s) {
        return a * CycNumber::from(s);
    }

    MultiSeries& operator+=(const MultiSeries& b) { return *this = *this + b; }
    MultiSeries& operator-=(const MultiSeries& b) { return *this = *this - b; }

    friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
        return a.vars_ == b.vars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    // Equality of all coefficients of total degree <= through.
    bool agrees_with(const MultiSeries& b, int through) const {
        if (vars_ != b.vars_) return false;
        for (const auto& [e, c] : terms_)
            if (total_degree(e) <= through && b.coeff(e) != c) return false;
        for (const auto& [e, c] : b.terms_)
            if (total_degree(e) <= through && coeff(e) != c) return false;
        return true;
    }

    MultiSeries derivative(int var) const {
        MultiSeries r(vars_, order_ - 1);
        std::vector<int> e;
        for (const auto& [exp, c] : terms_) {
            const std::size_t v = static_cast<std::size_t>(var);
            if (exp[v] == 0) continue;
            e = exp;
            e[v] -= 1;
            r.add_term(e, c * Rational(exp[v]));
        }
        return r;
    }

    // Substitute each old variable by a linear form in new variables:
    // map[i][j] is the coefficient of new_vars[j] in the image of vars_[i].
    // Linear only; constant shifts never pass through here.
    MultiSeries linear_substitute(const std::vector<std::string>& new_vars,
                                  const std::vector<std::vector<CycNumber>>& map) const {
        if (map.size() != static_cast<std::size_t>(nvars()))
            throw VariableMismatch("substitution rows != old variable count");
        for (const auto& row : map)
            if (row.size() != new_vars.size())
                throw VariableMismatch("substitution cols != new variable count");

        std::vector<MultiSeries> image;
        image.reserve(map.size());
        for (const auto& row : map) {
            MultiSeries l(new_vars, order_);
            for (std::size_t j = 0; j < row.size(); ++j) {
                std::vector<int> e(new_vars.size(), 0);
                e[j] = 1;
                l.add_term(e, row[j]);
            }
            image.push_back(std::move(l));
        }

        // Cache powers of each image form as needed.
        std::vector<std::vector<MultiSeries>> powers(image.size());
        auto power = [&](std::size_t i, int k) -> const MultiSeries& {
            auto& cache = powers[i];
            if (cache.empty()) {
                MultiSeries one(new_vars, order_);
                one.add_term(std::vector<int>(new_vars.size(), 0), CycNumber::one());
                cache.push_back(std::move(one));
            }
            while (static_cast<int>(cache.size()) <= k)
                cache.push_back(cache.back() * image[i]);
            return cache[static_cast<std::size_t>(k)];
        };

        MultiSeries r(new_vars, order_);
        for (const auto& [exp, c] : terms_) {
            MultiSeries m = power(0, exp[0]);
            for (std::size_t i = 1; i < image.size(); ++i) m = m * power(i, exp[i]);
            r += m * c;
        }
        return r;
    }

    // Coefficient times the product of factorials (undoing the generating
    // function normalization); must be rational.
    Rational integral_coefficient(const std::vector<int>& exp) const {
        if (static_cast<int>(exp.size()) != nvars())
            throw VariableMismatch("exponent arity in integral_coefficient");
        if (total_degree(exp) > order_)
            throw DegreeOutOfRange("integral_coefficient at degree " +
                                   std::to_string(total_degree(exp)));
        CycNumber c = coeff(exp);
        for (int e : exp) c = c * Rational(factorial(static_cast<unsigned>(e)));
        return c.as_rational();
    }

  private:
    MultiSeries compatible(const MultiSeries& b) const {
        if (vars_ != b.vars_)
            throw VariableMismatch("binary op on different variable lists");
        return MultiSeries(vars_, std::min(order_, b.order_));
    }

    std::map<std::vector<int>, CycNumber> trimmed_terms(int order) const {
        if (order >= order_) return terms_;
        std::map<std::vector<int>, CycNumber> t;
        for (const auto& [e, c] : terms_)
            if (total_degree(e) <= order) t.emplace(e, c);
        return t;
    }

    std::vector<std::string> vars_;
    int order_;
    std::map<std::vector<int>, CycNumber> terms_;
};

}  // namespace hhodge
