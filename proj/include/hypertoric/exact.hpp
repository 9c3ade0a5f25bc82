/**
 * Exact number types, dense matrices and the library-wide error type.
 *
 * Everything in hypertoric is computed over the integers or the rationals
 * with arbitrary precision (GMP through Boost.Multiprecision).  There is no
 * floating point anywhere in the library.
 */

#ifndef HYPERTORIC_EXACT_HPP
#define HYPERTORIC_EXACT_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace hypertoric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Sorted list of indices into a ground set.
using IndexSet = std::vector<int>;

enum class ErrorKind {
    NotFullRank,
    NonPrimitive,
    VariableCountMismatch,
    RankDeficient,
    Inconsistent,
    InfeasibleSlice,
    NegativeBetti,
    UnboundedRegion,
    NonGenericDirection,
    DegeneratePsi,
    NonGenericTheta,
    LoopPresent,
    ChamberCrossed,
    AnnihilatorMismatch,
    NotInImage,
    NotInjective,
    NonGenericD,
    Disconnected,
    NotASpanningTree,
    ParseError,
    DimensionMismatch,
    InvariantViolated,
};

const char* error_kind_name(ErrorKind kind);

/** Every failure raised by the library carries one of the kinds above. */
class Error : public std::runtime_error
{
    public:
        Error(ErrorKind kind, const std::string& what)
            : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

        ErrorKind kind() const noexcept { return kind_; }

    private:
        ErrorKind kind_;
};

/**
 * Dense row-major matrix with fixed dimensions.
 */
template <typename T>
class Matrix
{
    public:
        Matrix() = default;

        Matrix(std::size_t rows, std::size_t cols)
            : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

        Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
            : rows_(rows), cols_(cols), data_(std::move(data))
        {
            if (data_.size() != rows_ * cols_)
                throw Error(ErrorKind::DimensionMismatch, "matrix data has wrong length");
        }

        Matrix(std::initializer_list<std::initializer_list<T>> rows)
        {
            rows_ = rows.size();
            cols_ = rows_ == 0 ? 0 : rows.begin()->size();
            data_.reserve(rows_ * cols_);
            for (const auto& r : rows) {
                if (r.size() != cols_)
                    throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
                data_.insert(data_.end(), r.begin(), r.end());
            }
        }

        static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0)
        {
            std::size_t c = rows.empty() ? cols : rows.front().size();
            Matrix m(rows.size(), c);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i].size() != c)
                    throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
                for (std::size_t j = 0; j < c; ++j)
                    m(i, j) = rows[i][j];
            }
            return m;
        }

        static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows = 0)
        {
            std::size_t r = cols.empty() ? rows : cols.front().size();
            Matrix m(r, cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j) {
                if (cols[j].size() != r)
                    throw Error(ErrorKind::DimensionMismatch, "ragged matrix columns");
                for (std::size_t i = 0; i < r; ++i)
                    m(i, j) = cols[j][i];
            }
            return m;
        }

        static Matrix identity(std::size_t n)
        {
            Matrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                m(i, i) = T(1);
            return m;
        }

        std::size_t rows() const noexcept { return rows_; }
        std::size_t cols() const noexcept { return cols_; }

        T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
        const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

        std::vector<T> row(std::size_t r) const
        {
            return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
        }

        std::vector<T> col(std::size_t c) const
        {
            std::vector<T> v(rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                v[i] = (*this)(i, c);
            return v;
        }

        Matrix transpose() const
        {
            Matrix t(cols_, rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    t(j, i) = (*this)(i, j);
            return t;
        }

        Matrix select_cols(const IndexSet& idx) const
        {
            Matrix m(rows_, idx.size());
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t j = 0; j < idx.size(); ++j)
                    m(i, j) = (*this)(i, idx[j]);
            return m;
        }

        Matrix select_rows(const IndexSet& idx) const
        {
            Matrix m(idx.size(), cols_);
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = 0; j < cols_; ++j)
                    m(i, j) = (*this)(idx[i], j);
            return m;
        }

        const std::vector<T>& data() const noexcept { return data_; }

        bool operator==(const Matrix& o) const
        {
            return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
        }

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

/// Matrix-vector product.
IntVector multiply(const IntMatrix& a, const IntVector& x);
RatVector multiply(const RatMatrix& a, const RatVector& x);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

/// Horizontal concatenation [a, b].
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

/// "p/q" (or "p" for integers), the canonical text form used in reports.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integral(const Rational& q);

/// Bit mask helpers for subsets of small ground sets.
IndexSet mask_to_set(std::uint64_t mask);
std::uint64_t set_to_mask(const IndexSet& s);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> combinations(int n, int k);

Integer binomial(int n, int k);

}   // namespace hypertoric

#endif
