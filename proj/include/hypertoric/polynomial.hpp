/**
 * Multivariate polynomials with exact rational coefficients.
 *
 * The same type doubles as a constant-coefficient differential operator:
 * x^a read as d^a/dx^a.  Exponent vectors are stored in a sorted map, so
 * iteration order (and therefore every serialization) is deterministic.
 */

#ifndef HYPERTORIC_POLYNOMIAL_HPP
#define HYPERTORIC_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypertoric/exact.hpp"

namespace hypertoric {

using Exponent = std::vector<int>;

class MultiPoly
{
    public:
        MultiPoly() = default;
        explicit MultiPoly(int nvars) : nvars_(nvars) {}

        static MultiPoly constant(int nvars, const Rational& c);
        static MultiPoly variable(int nvars, int i);
        static MultiPoly monomial(const Exponent& e, const Rational& c = 1);
        /// sum_i coeffs[i] x_i
        static MultiPoly linear(const RatVector& coeffs);

        int nvars() const noexcept { return nvars_; }
        bool is_zero() const noexcept { return terms_.empty(); }
        const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }

        Rational coefficient(const Exponent& e) const;
        void add_term(const Exponent& e, const Rational& c);

        /// Total degree; -1 for the zero polynomial.
        int degree() const;
        bool is_homogeneous() const;

        Rational evaluate(const RatVector& point) const;
        MultiPoly derivative(int i) const;

        MultiPoly operator+(const MultiPoly& o) const;
        MultiPoly operator-(const MultiPoly& o) const;
        MultiPoly operator*(const MultiPoly& o) const;
        MultiPoly operator*(const Rational& s) const;
        MultiPoly operator-() const;
        MultiPoly& operator+=(const MultiPoly& o);
        bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
        bool operator!=(const MultiPoly& o) const { return !(*this == o); }

        MultiPoly pow(int k) const;

        /**
         * Compose with a linear change of variables: result(t) = p(M t) where
         * M is nvars() x k, i.e. x_j -> sum_k M(j,k) t_k.
         */
        MultiPoly substitute_linear(const RatMatrix& m) const;

        /// Human-readable form, e.g. "2*x0^2*x1 - 1/3*x2".
        std::string to_string(const std::vector<std::string>& names = {}) const;

    private:
        int nvars_ = 0;
        std::map<Exponent, Rational> terms_;
};

/// Apply a constant-coefficient differential operator to p.
MultiPoly apply_diff_op(const MultiPoly& op, const MultiPoly& p);

/// All exponent vectors of total degree `degree` in nvars variables, in
/// lexicographically decreasing order (x0^d first).
std::vector<Exponent> monomials_of_degree(int nvars, int degree);

/// Value of a monomial at a point.
Rational monomial_value(const Exponent& e, const RatVector& point);

struct Sample
{
    RatVector point;
    Rational value;
};

/**
 * The unique homogeneous polynomial of the given degree taking the sampled
 * values.  Throws RankDeficient when the samples do not determine it and
 * Inconsistent when no such polynomial exists.
 */
MultiPoly interpolate_homogeneous(const std::vector<Sample>& samples, int degree, int nvars);

/**
 * If p is a scalar multiple of q (q nonzero), returns the scalar c with
 * p = c q; otherwise returns false.
 */
bool proportional(const MultiPoly& p, const MultiPoly& q, Rational* c = nullptr);

}   // namespace hypertoric

#endif
