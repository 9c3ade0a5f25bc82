#include "hypertoric/gale.hpp"

#include "hypertoric/linalg.hpp"

namespace hypertoric {

GaleDualPair make_gale_pair(const IntMatrix& a)
{
    GaleDualPair pair{a, kernel_lattice_basis(a)};
    verify_gale_pair(pair);
    return pair;
}

void verify_gale_pair(const GaleDualPair& pair)
{
    const IntMatrix& a = pair.a;
    const IntMatrix& b = pair.b;
    if (b.rows() != a.cols() || b.cols() + a.rows() != a.cols())
        throw Error(ErrorKind::InvariantViolated, "Gale pair has inconsistent dimensions");
    IntMatrix ab = multiply(a, b);
    for (const auto& z : ab.data())
        if (!z.is_zero())
            throw Error(ErrorKind::InvariantViolated, "A * B is not zero");
    if (rank(a) != static_cast<int>(a.rows()))
        throw Error(ErrorKind::NotFullRank, "A is not of full row rank");
    if (maximal_minor_gcd(a) != 1)
        throw Error(ErrorKind::NonPrimitive, "A is not surjective onto Z^d");
    if (b.cols() > 0 && maximal_minor_gcd(b.transpose()) != 1)
        throw Error(ErrorKind::InvariantViolated, "columns of B do not span the full lattice kernel");
}

IndexSet zero_rows_of_b(const GaleDualPair& pair)
{
    IndexSet out;
    for (std::size_t i = 0; i < pair.b.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < pair.b.cols(); ++j)
            zero = zero && pair.b(i, j).is_zero();
        if (zero)
            out.push_back(static_cast<int>(i));
    }
    return out;
}

IndexSet zero_columns_of_a(const GaleDualPair& pair)
{
    IndexSet out;
    for (std::size_t j = 0; j < pair.a.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < pair.a.rows(); ++i)
            zero = zero && pair.a(i, j).is_zero();
        if (zero)
            out.push_back(static_cast<int>(j));
    }
    return out;
}

}   // namespace hypertoric
