#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "qvertex/laurent.hpp"

namespace qvertex {

/// Exact element of Q(q), kept in canonical form after every operation:
/// numerator and denominator coprime in Z[q, q^-1], the denominator an
/// ordinary polynomial with positive constant term, and the integer
/// contents of numerator and denominator coprime. Equality is therefore
/// structural.
class RationalFunctionQ {
public:
    RationalFunctionQ() : den_(1) {}
    RationalFunctionQ(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit RationalFunctionQ(const mpz_class &c) : num_(c), den_(1) {}
    explicit RationalFunctionQ(const mpq_class &c);
    explicit RationalFunctionQ(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    RationalFunctionQ(LaurentPoly num, LaurentPoly den);

    /// c * q^k
    static RationalFunctionQ monomial(long c, int k);
    static RationalFunctionQ q_power(int k) { return monomial(1, k); }

    const LaurentPoly &num() const { return num_; }
    const LaurentPoly &den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_constant() && den_.is_constant() && num_ == den_; }
    /// True when the value lies in Q (no q dependence).
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// The rational value when is_constant().
    std::optional<mpq_class> constant_value() const;

    RationalFunctionQ operator-() const;
    RationalFunctionQ &operator+=(const RationalFunctionQ &o);
    RationalFunctionQ &operator-=(const RationalFunctionQ &o);
    RationalFunctionQ &operator*=(const RationalFunctionQ &o);
    RationalFunctionQ &operator/=(const RationalFunctionQ &o);

    friend RationalFunctionQ operator+(RationalFunctionQ a, const RationalFunctionQ &b) { return a += b; }
    friend RationalFunctionQ operator-(RationalFunctionQ a, const RationalFunctionQ &b) { return a -= b; }
    friend RationalFunctionQ operator*(RationalFunctionQ a, const RationalFunctionQ &b) { return a *= b; }
    friend RationalFunctionQ operator/(RationalFunctionQ a, const RationalFunctionQ &b) { return a /= b; }
    friend bool operator==(const RationalFunctionQ &a, const RationalFunctionQ &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunctionQ &a, const RationalFunctionQ &b) { return !(a == b); }

    RationalFunctionQ inverse() const;
    RationalFunctionQ pow(int e) const;

    /// q -> q^k.
    RationalFunctionQ substitute_power(int k) const;

    /// Value at a rational point; nullopt when the denominator vanishes there.
    std::optional<mpq_class> evaluate(const mpq_class &q) const;

    std::string to_string() const;

private:
    struct Canonical {};
    RationalFunctionQ(LaurentPoly num, LaurentPoly den, Canonical)
        : num_(std::move(num)), den_(std::move(den))
    {
    }
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

/// q-integer [n] = (q^n - q^-n) / (q - q^-1).
RationalFunctionQ qint(int n);

}  // namespace qvertex
