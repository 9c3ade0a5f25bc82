/**
 * Small dense exact simplex method (two phases, Bland's rule).
 *
 *     maximize c.x  subject to  A x = b,  x >= 0
 *
 * Sizes here are tiny (a few dozen columns), so a full rational tableau is
 * perfectly adequate and termination is guaranteed by Bland's rule.
 */

#ifndef HYPERTORIC_LP_HPP
#define HYPERTORIC_LP_HPP

#include "hypertoric/exact.hpp"

namespace hypertoric {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult
{
    LpStatus status = LpStatus::Infeasible;
    RatVector x;            // an optimal vertex when status == Optimal
    Rational value = 0;
};

LpResult solve_lp(const RatMatrix& a, const RatVector& b, const RatVector& c);

/// Some x >= 0 with A x = b, or an empty vector when there is none.
bool lp_feasible(const RatMatrix& a, const RatVector& b, RatVector* witness = nullptr);

/**
 * Does the cone {x >= 0 : A x = 0, x_i = 0 for i outside support} contain a
 * nonzero point?  Used for recession-cone (boundedness) tests.
 */
bool has_nonzero_recession(const RatMatrix& a, const IndexSet& support);

}   // namespace hypertoric

#endif
