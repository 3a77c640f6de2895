#include "qvertex/rational.hpp"

#include <stdexcept>

namespace qvertex {

using detail::poly_divexact;
using detail::poly_gcd;

namespace {

bool is_unit_one(const LaurentPoly &p) { return p.is_constant() && !p.is_zero() && p.lowest_coeff() == 1; }

}  // namespace

RationalFunctionQ::RationalFunctionQ(const mpq_class &c)
    : num_(mpz_class(c.get_num())), den_(mpz_class(c.get_den()))
{
    normalize();
}

RationalFunctionQ::RationalFunctionQ(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("RationalFunctionQ: zero denominator");
    normalize();
}

RationalFunctionQ RationalFunctionQ::monomial(long c, int k)
{
    return RationalFunctionQ(LaurentPoly::monomial(c, k), LaurentPoly(1), Canonical{});
}

void RationalFunctionQ::normalize()
{
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    const int e = den_.low();
    if (e != 0) {
        den_ = den_.shifted(-e);
        num_ = num_.shifted(-e);
    }
    if (!is_unit_one(den_)) {
        LaurentPoly g = poly_gcd(num_, den_);
        if (!is_unit_one(g)) {
            num_ = poly_divexact(num_, g);
            den_ = poly_divexact(den_, g);
        }
    }
    if (den_.lowest_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::optional<mpq_class> RationalFunctionQ::constant_value() const
{
    if (!is_constant()) return std::nullopt;
    if (num_.is_zero()) return mpq_class(0);
    mpq_class v(num_.lowest_coeff(), den_.lowest_coeff());
    v.canonicalize();
    return v;
}

RationalFunctionQ RationalFunctionQ::operator-() const { return {-num_, den_, Canonical{}}; }

RationalFunctionQ &RationalFunctionQ::operator+=(const RationalFunctionQ &o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_unit_one(den_) && is_unit_one(o.den_)) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    LaurentPoly g = poly_gcd(den_, o.den_);
    if (is_unit_one(g)) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = LaurentPoly(1);
        return *this;
    }
    LaurentPoly b1 = poly_divexact(den_, g);
    LaurentPoly d1 = poly_divexact(o.den_, g);
    LaurentPoly n = num_ * d1 + o.num_ * b1;
    LaurentPoly d = den_ * d1;
    if (n.is_zero()) return *this = RationalFunctionQ();
    LaurentPoly g2 = poly_gcd(n, g);
    if (!is_unit_one(g2)) {
        n = poly_divexact(n, g2);
        d = poly_divexact(d, g2);
    }
    num_ = std::move(n);
    den_ = std::move(d);
    return *this;
}

RationalFunctionQ &RationalFunctionQ::operator-=(const RationalFunctionQ &o) { return *this += -o; }

RationalFunctionQ &RationalFunctionQ::operator*=(const RationalFunctionQ &o)
{
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalFunctionQ();
    if (is_unit_one(den_) && is_unit_one(o.den_)) {
        num_ *= o.num_;
        return *this;
    }
    LaurentPoly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!is_unit_one(d)) {
        LaurentPoly g1 = poly_gcd(a, d);
        if (!is_unit_one(g1)) {
            a = poly_divexact(a, g1);
            d = poly_divexact(d, g1);
        }
    }
    if (!is_unit_one(b)) {
        LaurentPoly g2 = poly_gcd(c, b);
        if (!is_unit_one(g2)) {
            c = poly_divexact(c, g2);
            b = poly_divexact(b, g2);
        }
    }
    num_ = a * c;
    den_ = b * d;
    // Both denominators were polynomials with positive constant term and
    // coprime to the opposite numerator, so the result is canonical.
    return *this;
}

RationalFunctionQ RationalFunctionQ::inverse() const
{
    if (is_zero()) throw std::domain_error("RationalFunctionQ: inverse of zero");
    const int e = num_.low();
    LaurentPoly n = den_.shifted(-e);
    LaurentPoly d = num_.shifted(-e);
    if (d.lowest_coeff() < 0) {
        n = -n;
        d = -d;
    }
    return {std::move(n), std::move(d), Canonical{}};
}

RationalFunctionQ &RationalFunctionQ::operator/=(const RationalFunctionQ &o) { return *this *= o.inverse(); }

RationalFunctionQ RationalFunctionQ::pow(int e) const
{
    if (e < 0) return inverse().pow(-e);
    RationalFunctionQ result(1);
    RationalFunctionQ base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

RationalFunctionQ RationalFunctionQ::substitute_power(int k) const
{
    if (k == 1) return *this;
    return {num_.substitute_power(k), den_.substitute_power(k)};
}

std::optional<mpq_class> RationalFunctionQ::evaluate(const mpq_class &q) const
{
    mpq_class d = den_.evaluate(q);
    if (d == 0) return std::nullopt;
    mpq_class v = num_.evaluate(q) / d;
    v.canonicalize();
    return v;
}

std::string RationalFunctionQ::to_string() const
{
    if (is_unit_one(den_)) return num_.to_string();
    auto wrap = [](const LaurentPoly &p) {
        std::string s = p.to_string();
        return p.term_count() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

RationalFunctionQ qint(int n)
{
    // (q^n - q^-n)/(q - q^-1), exact division of q^{2n} - 1 by q^2 - 1 (times q^{1-n}).
    return RationalFunctionQ(LaurentPoly::monomial(1, n) - LaurentPoly::monomial(1, -n),
                             LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1));
}

}  // namespace qvertex
