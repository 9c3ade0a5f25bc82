#include "hypertoric/exact.hpp"

#include <bit>

namespace hypertoric {

const char* error_kind_name(ErrorKind kind)
{
    switch (kind) {
        case ErrorKind::NotFullRank:           return "NotFullRank";
        case ErrorKind::NonPrimitive:          return "NonPrimitive";
        case ErrorKind::VariableCountMismatch: return "VariableCountMismatch";
        case ErrorKind::RankDeficient:         return "RankDeficient";
        case ErrorKind::Inconsistent:          return "Inconsistent";
        case ErrorKind::InfeasibleSlice:       return "InfeasibleSlice";
        case ErrorKind::NegativeBetti:         return "NegativeBetti";
        case ErrorKind::UnboundedRegion:       return "UnboundedRegion";
        case ErrorKind::NonGenericDirection:   return "NonGenericDirection";
        case ErrorKind::DegeneratePsi:         return "DegeneratePsi";
        case ErrorKind::NonGenericTheta:       return "NonGenericTheta";
        case ErrorKind::LoopPresent:           return "LoopPresent";
        case ErrorKind::ChamberCrossed:        return "ChamberCrossed";
        case ErrorKind::AnnihilatorMismatch:   return "AnnihilatorMismatch";
        case ErrorKind::NotInImage:            return "NotInImage";
        case ErrorKind::NotInjective:          return "NotInjective";
        case ErrorKind::NonGenericD:           return "NonGenericD";
        case ErrorKind::Disconnected:          return "Disconnected";
        case ErrorKind::NotASpanningTree:      return "NotASpanningTree";
        case ErrorKind::ParseError:            return "ParseError";
        case ErrorKind::DimensionMismatch:     return "DimensionMismatch";
        case ErrorKind::InvariantViolated:     return "InvariantViolated";
    }
    return "Unknown";
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

RatVector to_rational(const IntVector& v)
{
    RatVector r;
    r.reserve(v.size());
    for (const auto& z : v)
        r.emplace_back(z);
    return r;
}

IntVector multiply(const IntMatrix& a, const IntVector& x)
{
    if (a.cols() != x.size())
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    IntVector y(a.rows(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!x[j].is_zero())
                y[i] += a(i, j) * x[j];
    return y;
}

RatVector multiply(const RatMatrix& a, const RatVector& x)
{
    if (a.cols() != x.size())
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    RatVector y(a.rows(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!x[j].is_zero())
                y[i] += a(i, j) * x[j];
    return y;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::DimensionMismatch, "matrix product");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw Error(ErrorKind::DimensionMismatch, "hstack");
    IntMatrix c(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            c(i, a.cols() + j) = b(i, j);
    }
    return c;
}

std::string to_string(const Rational& q)
{
    if (boost::multiprecision::denominator(q) == 1)
        return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

std::string to_string(const Integer& z)
{
    return z.str();
}

bool is_integral(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

IndexSet mask_to_set(std::uint64_t mask)
{
    IndexSet s;
    while (mask) {
        int i = std::countr_zero(mask);
        s.push_back(i);
        mask &= mask - 1;
    }
    return s;
}

std::uint64_t set_to_mask(const IndexSet& s)
{
    std::uint64_t m = 0;
    for (int i : s)
        m |= std::uint64_t(1) << i;
    return m;
}

std::vector<IndexSet> combinations(int n, int k)
{
    std::vector<IndexSet> out;
    if (k < 0 || k > n)
        return out;
    IndexSet cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return Integer(0);
    Integer r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}   // namespace hypertoric
