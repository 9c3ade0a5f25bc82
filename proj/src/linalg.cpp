#include "hypertoric/linalg.hpp"

#include <algorithm>

namespace hypertoric {

namespace {

void swap_rows(RatMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(a, j), m(b, j));
}

}   // namespace

RowEchelon rref(RatMatrix m)
{
    RowEchelon out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        swap_rows(m, row, piv);
        Rational inv = 1 / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero())
                continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero())
                    m(i, j) -= f * m(row, j);
        }
        out.pivots.push_back(static_cast<int>(col));
        ++row;
    }
    out.reduced = std::move(m);
    return out;
}

int rank(const RatMatrix& m)
{
    return static_cast<int>(rref(m).pivots.size());
}

int rank(const IntMatrix& m)
{
    // Fraction-free elimination on a copy.
    IntMatrix a = m;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col).is_zero())
            ++piv;
        if (piv == a.rows())
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(row, j), a(piv, j));
        for (std::size_t i = row + 1; i < a.rows(); ++i) {
            if (a(i, col).is_zero())
                continue;
            Integer f = a(i, col), p = a(row, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a(i, j) = a(i, j) * p - a(row, j) * f;
        }
        ++row;
    }
    return static_cast<int>(row);
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0)
        return Integer(1);
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k).is_zero())
                ++piv;
            if (piv == n)
                return Integer(0);
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    RatMatrix a = m;
    std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c).is_zero())
            ++piv;
        if (piv == n)
            return Rational(0);
        if (piv != c) {
            swap_rows(a, c, piv);
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero())
                continue;
            Rational f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j)
                a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b)
{
    if (a.rows() != a.cols() || b.size() != a.rows())
        throw Error(ErrorKind::DimensionMismatch, "solve_square");
    std::size_t n = a.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    RowEchelon e = rref(std::move(aug));
    if (e.pivots.size() < n || (!e.pivots.empty() && e.pivots.back() == static_cast<int>(n)))
        return std::nullopt;
    RatVector x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = e.reduced(i, n);
    return x;
}

std::optional<RatVector> solve_any(const RatMatrix& a, const RatVector& b)
{
    if (b.size() != a.rows())
        throw Error(ErrorKind::DimensionMismatch, "solve_any");
    std::size_t m = a.rows(), n = a.cols();
    RatMatrix aug(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    RowEchelon e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == static_cast<int>(n))
        return std::nullopt;
    RatVector x(n, Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.reduced(r, n);
    return x;
}

RatMatrix nullspace(const RatMatrix& m)
{
    RowEchelon e = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : e.pivots)
        is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(n, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return RatMatrix::from_columns(basis, n);
}

IntVector primitive_integer_vector(const RatVector& v)
{
    Integer l = 1;
    for (const auto& q : v)
        l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(q)));
    IntVector z(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        z[i] = Integer(boost::multiprecision::numerator(Rational(v[i] * l)));
        g = boost::multiprecision::gcd(g, z[i]);
    }
    if (g > 1)
        for (auto& x : z)
            x /= g;
    return z;
}

Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y)
{
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (!r.is_zero()) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r; old_s = -old_s; old_t = -old_t;
    }
    x = old_s;
    y = old_t;
    return old_r;
}

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;   // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

Rational dot(const RatVector& a, const RatVector& b)
{
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "dot product");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            s += a[i] * b[i];
    return s;
}

ColumnHermite column_hermite(const IntMatrix& a)
{
    std::size_t d = a.rows(), n = a.cols();
    ColumnHermite out;
    out.h = a;
    out.u = IntMatrix::identity(n);
    IntMatrix& h = out.h;
    IntMatrix& u = out.u;

    auto col_combine = [&](std::size_t p, std::size_t q, const Integer& x, const Integer& y,
                           const Integer& z, const Integer& w) {
        // (col_p, col_q) <- (x col_p + y col_q, z col_p + w col_q)
        for (std::size_t i = 0; i < d; ++i) {
            Integer cp = h(i, p), cq = h(i, q);
            h(i, p) = x * cp + y * cq;
            h(i, q) = z * cp + w * cq;
        }
        for (std::size_t i = 0; i < n; ++i) {
            Integer cp = u(i, p), cq = u(i, q);
            u(i, p) = x * cp + y * cq;
            u(i, q) = z * cp + w * cq;
        }
    };
    auto negate_col = [&](std::size_t p) {
        for (std::size_t i = 0; i < d; ++i)
            h(i, p) = -h(i, p);
        for (std::size_t i = 0; i < n; ++i)
            u(i, p) = -u(i, p);
    };

    std::size_t r = 0;
    for (std::size_t i = 0; i < d && r < n; ++i) {
        for (std::size_t j = r + 1; j < n; ++j) {
            if (h(i, j).is_zero())
                continue;
            if (h(i, r).is_zero()) {
                col_combine(r, j, Integer(0), Integer(1), Integer(1), Integer(0));
                continue;
            }
            Integer x, y;
            Integer g = extended_gcd(h(i, r), h(i, j), x, y);
            Integer a_g = h(i, r) / g, b_g = h(i, j) / g;
            col_combine(r, j, x, y, -b_g, a_g);
        }
        if (h(i, r).is_zero())
            continue;
        if (h(i, r) < 0)
            negate_col(r);
        // Reduce earlier columns modulo this pivot to keep entries small.
        for (std::size_t q = 0; q < r; ++q) {
            Integer f = floor_div(h(i, q), h(i, r));
            if (!f.is_zero())
                col_combine(q, r, Integer(1), Integer(-f), Integer(0), Integer(1));
        }
        out.pivot_rows.push_back(static_cast<int>(i));
        ++r;
    }
    out.rank = static_cast<int>(r);
    return out;
}

IntMatrix canonical_lattice_basis(const IntMatrix& b)
{
    ColumnHermite ch = column_hermite(b);
    if (ch.rank != static_cast<int>(b.cols()))
        throw Error(ErrorKind::NotFullRank, "lattice generators are linearly dependent");
    IntMatrix out(b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(i, j) = ch.h(i, j);
    return out;
}

Integer maximal_minor_gcd(const IntMatrix& a)
{
    ColumnHermite ch = column_hermite(a);
    if (ch.rank < static_cast<int>(a.rows()))
        return Integer(0);
    Integer g = 1;
    for (int k = 0; k < ch.rank; ++k)
        g *= ch.h(ch.pivot_rows[k], k);
    return g;
}

IntMatrix kernel_lattice_basis(const IntMatrix& a)
{
    std::size_t d = a.rows(), n = a.cols();
    ColumnHermite ch = column_hermite(a);
    if (ch.rank < static_cast<int>(d))
        throw Error(ErrorKind::NotFullRank, "matrix has rank " + std::to_string(ch.rank) +
                                                " < " + std::to_string(d) + " rows");
    Integer g = 1;
    for (int k = 0; k < ch.rank; ++k)
        g *= ch.h(ch.pivot_rows[k], k);
    if (g != 1)
        throw Error(ErrorKind::NonPrimitive, "gcd of maximal minors is " + g.str());
    IntMatrix b(n, n - d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = d; j < n; ++j)
            b(i, j - d) = ch.u(i, j);
    if (b.cols() == 0)
        return b;
    return canonical_lattice_basis(b);
}

IntMatrix saturate(const IntMatrix& p)
{
    // Z^m cap span(P) = ker_Z(K^T) where the rows of K^T span the left null space of P.
    std::size_t m = p.rows();
    if (p.cols() == 0)
        return IntMatrix(m, 0);
    RatMatrix left = nullspace(to_rational(p.transpose()));    // m x (m - rank)
    if (left.cols() == 0)
        return IntMatrix::identity(m);
    std::vector<IntVector> rows;
    for (std::size_t j = 0; j < left.cols(); ++j)
        rows.push_back(primitive_integer_vector(left.col(j)));
    IntMatrix kt = IntMatrix::from_rows(rows);
    ColumnHermite ch = column_hermite(kt);
    IntMatrix w(m, m - ch.rank);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = ch.rank; j < m; ++j)
            w(i, j - ch.rank) = ch.u(i, j);
    return w;
}

std::vector<Integer> maximal_minors(const IntMatrix& a)
{
    std::vector<Integer> out;
    for (const auto& c : combinations(static_cast<int>(a.cols()), static_cast<int>(a.rows())))
        out.push_back(determinant(a.select_cols(c)));
    return out;
}

std::vector<Integer> maximal_row_minors(const IntMatrix& b)
{
    std::vector<Integer> out;
    for (const auto& c : combinations(static_cast<int>(b.rows()), static_cast<int>(b.cols())))
        out.push_back(determinant(b.select_rows(c)));
    return out;
}

bool is_unimodular(const IntMatrix& a)
{
    if (rank(a) < static_cast<int>(a.rows()))
        throw Error(ErrorKind::NotFullRank, "is_unimodular requires full row rank");
    Integer common = 0;
    bool same = true;
    for (const auto& m : maximal_minors(a)) {
        Integer v = boost::multiprecision::abs(m);
        if (v.is_zero())
            continue;
        if (common.is_zero())
            common = v;
        else if (v != common)
            same = false;
    }
    if (maximal_minor_gcd(a) != 1)
        return same;
    IntMatrix b = kernel_lattice_basis(a);
    bool dual = true;
    for (const auto& m : maximal_row_minors(b))
        if (boost::multiprecision::abs(m) > 1)
            dual = false;
    if (dual != same)
        throw Error(ErrorKind::InvariantViolated,
                    "minor criterion on A disagrees with the criterion on its Gale dual");
    return same;
}

}   // namespace hypertoric
