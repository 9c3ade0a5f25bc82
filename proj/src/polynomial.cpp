#include "hypertoric/polynomial.hpp"

#include <sstream>

#include "hypertoric/linalg.hpp"

namespace hypertoric {

MultiPoly MultiPoly::constant(int nvars, const Rational& c)
{
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i)
{
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c)
{
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::linear(const RatVector& coeffs)
{
    int n = static_cast<int>(coeffs.size());
    MultiPoly p(n);
    for (int i = 0; i < n; ++i) {
        Exponent e(n, 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

Rational MultiPoly::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c)
{
    if (static_cast<int>(e.size()) != nvars_)
        throw Error(ErrorKind::VariableCountMismatch, "exponent length does not match variable count");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

int MultiPoly::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e)
            s += k;
        d = std::max(d, s);
    }
    return d;
}

bool MultiPoly::is_homogeneous() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e)
            s += k;
        if (d >= 0 && s != d)
            return false;
        d = s;
    }
    return true;
}

Rational monomial_value(const Exponent& e, const RatVector& point)
{
    Rational v = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k)
            v *= point[i];
    return v;
}

Rational MultiPoly::evaluate(const RatVector& point) const
{
    if (static_cast<int>(point.size()) != nvars_)
        throw Error(ErrorKind::VariableCountMismatch, "evaluation point has wrong length");
    Rational s = 0;
    for (const auto& [e, c] : terms_)
        s += c * monomial_value(e, point);
    return s;
}

MultiPoly MultiPoly::derivative(int i) const
{
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0)
            continue;
        Exponent f = e;
        --f[i];
        out.add_term(f, c * e[i]);
    }
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
    MultiPoly r = *this;
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    if (o.nvars_ != nvars_)
        throw Error(ErrorKind::VariableCountMismatch, "polynomial sum");
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const
{
    return *this + (-o);
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const
{
    MultiPoly r(nvars_);
    if (s.is_zero())
        return r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
    if (o.nvars_ != nvars_)
        throw Error(ErrorKind::VariableCountMismatch, "polynomial product");
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e(nvars_);
            for (int i = 0; i < nvars_; ++i)
                e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::pow(int k) const
{
    MultiPoly r = constant(nvars_, 1);
    for (int i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

MultiPoly MultiPoly::substitute_linear(const RatMatrix& m) const
{
    if (static_cast<int>(m.rows()) != nvars_)
        throw Error(ErrorKind::VariableCountMismatch, "substitution matrix has wrong row count");
    int k = static_cast<int>(m.cols());
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    for (int j = 0; j < nvars_; ++j)
        powers[j].push_back(constant(k, 1));
    MultiPoly out(k);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = constant(k, c);
        for (int j = 0; j < nvars_; ++j) {
            if (e[j] == 0)
                continue;
            while (static_cast<int>(powers[j].size()) <= e[j])
                powers[j].push_back(powers[j].back() * linear(m.row(j)));
            term = term * powers[j][e[j]];
        }
        out += term;
    }
    return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Print higher exponents first, the conventional reading order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        bool any_var = false;
        for (int v : e)
            any_var = any_var || v > 0;
        bool unit = (a == 1);
        if (!unit || !any_var)
            os << hypertoric::to_string(a);
        bool need_star = !unit || !any_var;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0)
                continue;
            if (need_star)
                os << "*";
            os << (i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i));
            if (e[i] > 1)
                os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly apply_diff_op(const MultiPoly& op, const MultiPoly& p)
{
    if (op.nvars() != p.nvars())
        throw Error(ErrorKind::VariableCountMismatch, "operator and polynomial use different variable counts");
    int n = p.nvars();
    MultiPoly out(n);
    for (const auto& [a, c] : op.terms()) {
        for (const auto& [b, d] : p.terms()) {
            Exponent e(n);
            Integer factor = 1;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                if (b[i] < a[i]) {
                    ok = false;
                    break;
                }
                e[i] = b[i] - a[i];
                for (int k = 0; k < a[i]; ++k)
                    factor *= b[i] - k;
            }
            if (ok)
                out.add_term(e, c * d * Rational(factor));
        }
    }
    return out;
}

std::vector<Exponent> monomials_of_degree(int nvars, int degree)
{
    std::vector<Exponent> out;
    if (degree < 0)
        return out;
    if (nvars == 0) {
        if (degree == 0)
            out.emplace_back();
        return out;
    }
    Exponent e(nvars, 0);
    // Recursive fill: first coordinate from degree down to 0.
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == nvars - 1) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    rec(rec, 0, degree);
    return out;
}

MultiPoly interpolate_homogeneous(const std::vector<Sample>& samples, int degree, int nvars)
{
    std::vector<Exponent> mons = monomials_of_degree(nvars, degree);
    if (samples.size() < mons.size())
        throw Error(ErrorKind::RankDeficient, "need at least " + std::to_string(mons.size()) +
                                                  " samples, got " + std::to_string(samples.size()));
    RatMatrix sys(samples.size(), mons.size());
    RatVector rhs(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (static_cast<int>(samples[i].point.size()) != nvars)
            throw Error(ErrorKind::VariableCountMismatch, "sample point has wrong length");
        for (std::size_t j = 0; j < mons.size(); ++j)
            sys(i, j) = monomial_value(mons[j], samples[i].point);
        rhs[i] = samples[i].value;
    }
    if (rank(sys) < static_cast<int>(mons.size()))
        throw Error(ErrorKind::RankDeficient, "sample points do not determine a degree-" +
                                                  std::to_string(degree) + " form");
    auto sol = solve_any(sys, rhs);
    if (!sol)
        throw Error(ErrorKind::Inconsistent, "samples are not values of a homogeneous polynomial of degree " +
                                                 std::to_string(degree));
    MultiPoly p(nvars);
    for (std::size_t j = 0; j < mons.size(); ++j)
        p.add_term(mons[j], (*sol)[j]);
    return p;
}

bool proportional(const MultiPoly& p, const MultiPoly& q, Rational* c)
{
    if (q.is_zero())
        return false;
    const auto& [e0, q0] = *q.terms().begin();
    Rational s = p.coefficient(e0) / q0;
    if (q * s != p)
        return false;
    if (c)
        *c = s;
    return true;
}

}   // namespace hypertoric
