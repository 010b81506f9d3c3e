#pragma once

#include <string>
#include <vector>

#include <hhodge/errors.hpp>

namespace hhodge {

// Exact dense linear solver over a field (division must be exact).
//
// Rows are augmented: ncols coefficient entries followed by the right hand
// side. Systems may be overdetermined; redundant rows are checked for
// consistency. Pivoting is deterministic: columns in unknown order, first
// usable row. Throws RankDeficient if some unknown is never pinned and
// InconsistentSystem if the rows contradict each other.
template <class F>
class LinearSystem {
  public:
    explicit LinearSystem(std::size_t ncols) : ncols_(ncols) {}

    std::size_t unknowns() const { return ncols_; }
    std::size_t equations() const { return rows_.size(); }

    void add_row(std::vector<F> lhs, F rhs) {
        lhs.push_back(std::move(rhs));
        rows_.push_back(std::move(lhs));
    }

    std::vector<F> solve(const std::string& ctx) const {
        auto m = rows_;
        const std::size_t nrows = m.size();
        std::vector<std::size_t> pivot_row(ncols_);
        std::size_t next = 0;
        for (std::size_t col = 0; col < ncols_; ++col) {
            std::size_t r = next;
            while (r < nrows && m[r][col] == 0) ++r;
            if (r == nrows)
                throw RankDeficient(ctx + " (unknown " + std::to_string(col) + ")");
            std::swap(m[r], m[next]);
            const F piv = m[next][col];
            for (std::size_t j = col; j <= ncols_; ++j) m[next][j] /= piv;
            for (std::size_t i = 0; i < nrows; ++i) {
                if (i == next || m[i][col] == 0) continue;
                const F f = m[i][col];
                for (std::size_t j = col; j <= ncols_; ++j) m[i][j] -= f * m[next][j];
            }
            pivot_row[col] = next;
            ++next;
        }
        for (std::size_t i = next; i < nrows; ++i)
            if (m[i][ncols_] != 0) throw InconsistentSystem(ctx);
        std::vector<F> x(ncols_);
        for (std::size_t col = 0; col < ncols_; ++col) x[col] = m[pivot_row[col]][ncols_];
        return x;
    }

  private:
    std::size_t ncols_;
    std::vector<std::vector<F>> rows_;
};

}  // namespace hhodge
