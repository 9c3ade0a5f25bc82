#include "hypertoric/lp.hpp"

namespace hypertoric {

namespace {

// Tableau in the usual layout: rows 0..m-1 are constraints, the last column
// is the right hand side; the objective row stores reduced costs (minimized).
class Tableau
{
    public:
        Tableau(std::size_t m, std::size_t ncols) : t_(m + 1, ncols + 1), basis_(m, -1), m_(m), n_(ncols) {}

        Rational& at(std::size_t r, std::size_t c) { return t_(r, c); }
        Rational& rhs(std::size_t r) { return t_(r, n_); }
        Rational& cost(std::size_t c) { return t_(m_, c); }
        Rational& cost_rhs() { return t_(m_, n_); }
        std::vector<int>& basis() { return basis_; }
        std::size_t rows() const { return m_; }
        std::size_t cols() const { return n_; }

        void pivot(std::size_t r, std::size_t c)
        {
            Rational inv = 1 / t_(r, c);
            for (std::size_t j = 0; j <= n_; ++j)
                if (!t_(r, j).is_zero())
                    t_(r, j) *= inv;
            for (std::size_t i = 0; i <= m_; ++i) {
                if (i == r || t_(i, c).is_zero())
                    continue;
                Rational f = t_(i, c);
                for (std::size_t j = 0; j <= n_; ++j)
                    if (!t_(r, j).is_zero())
                        t_(i, j) -= f * t_(r, j);
            }
            basis_[r] = static_cast<int>(c);
        }

        // Minimize the objective row over columns allowed by `usable`.
        // Returns false if unbounded.
        bool run(const std::vector<bool>& usable)
        {
            while (true) {
                int enter = -1;
                for (std::size_t j = 0; j < n_; ++j)
                    if (usable[j] && t_(m_, j) < 0) {
                        enter = static_cast<int>(j);
                        break;
                    }
                if (enter < 0)
                    return true;
                int leave = -1;
                Rational best;
                for (std::size_t i = 0; i < m_; ++i) {
                    if (t_(i, enter) <= 0)
                        continue;
                    Rational ratio = t_(i, n_) / t_(i, enter);
                    if (leave < 0 || ratio < best ||
                        (ratio == best && basis_[i] < basis_[leave])) {
                        leave = static_cast<int>(i);
                        best = ratio;
                    }
                }
                if (leave < 0)
                    return false;
                pivot(static_cast<std::size_t>(leave), static_cast<std::size_t>(enter));
            }
        }

    private:
        RatMatrix t_;
        std::vector<int> basis_;
        std::size_t m_, n_;
};

}   // namespace

LpResult solve_lp(const RatMatrix& a, const RatVector& b, const RatVector& c)
{
    const std::size_t m = a.rows(), n = a.cols();
    if (b.size() != m || c.size() != n)
        throw Error(ErrorKind::DimensionMismatch, "linear program dimensions");

    // Phase 1: columns 0..n-1 original, n..n+m-1 artificial.
    Tableau tab(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        bool neg = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            tab.at(i, j) = neg ? -a(i, j) : a(i, j);
        tab.at(i, n + i) = 1;
        tab.rhs(i) = neg ? -b[i] : b[i];
        tab.basis()[i] = static_cast<int>(n + i);
    }
    // Objective: minimize the sum of artificials, expressed in nonbasic terms.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            tab.cost(j) -= tab.at(i, j);
        tab.cost_rhs() -= tab.rhs(i);
    }
    std::vector<bool> usable(n + m, true);
    tab.run(usable);

    LpResult result;
    if (tab.cost_rhs() != 0) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    // Drive artificials out of the basis where possible; rows where that is
    // impossible are redundant and stay with a zero artificial.
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis()[i] < static_cast<int>(n))
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (!tab.at(i, j).is_zero()) {
                tab.pivot(i, j);
                break;
            }
    }
    for (std::size_t j = n; j < n + m; ++j)
        usable[j] = false;

    // Phase 2: minimize -c.x.
    for (std::size_t j = 0; j <= n + m; ++j)
        tab.cost(j) = 0;
    for (std::size_t j = 0; j < n; ++j)
        tab.cost(j) = -c[j];
    for (std::size_t i = 0; i < m; ++i) {
        int bj = tab.basis()[i];
        if (bj >= static_cast<int>(n) || tab.cost(bj).is_zero())
            continue;
        Rational f = tab.cost(bj);
        for (std::size_t j = 0; j < n + m; ++j)
            if (!tab.at(i, j).is_zero())
                tab.cost(j) -= f * tab.at(i, j);
        tab.cost_rhs() -= f * tab.rhs(i);
    }
    if (!tab.run(usable)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        int bj = tab.basis()[i];
        if (bj < static_cast<int>(n))
            result.x[bj] = tab.rhs(i);
    }
    result.value = 0;
    for (std::size_t j = 0; j < n; ++j)
        result.value += c[j] * result.x[j];
    return result;
}

bool lp_feasible(const RatMatrix& a, const RatVector& b, RatVector* witness)
{
    LpResult r = solve_lp(a, b, RatVector(a.cols(), Rational(0)));
    if (r.status != LpStatus::Optimal)
        return false;
    if (witness)
        *witness = r.x;
    return true;
}

bool has_nonzero_recession(const RatMatrix& a, const IndexSet& support)
{
    // x_S >= 0, A_S x_S = 0, sum x_S = 1.
    const std::size_t m = a.rows(), k = support.size();
    if (k == 0)
        return false;
    RatMatrix sys(m + 1, k);
    RatVector rhs(m + 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
            sys(i, j) = a(i, support[j]);
    for (std::size_t j = 0; j < k; ++j)
        sys(m, j) = 1;
    rhs[m] = 1;
    return lp_feasible(sys, rhs);
}

}   // namespace hypertoric
