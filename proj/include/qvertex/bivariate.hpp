#pragma once

#include <string>
#include <vector>

#include "qvertex/rational.hpp"

namespace qvertex {

/// Polynomial in s over the field Q(t). The t-field reuses RationalFunctionQ
/// with its formal variable read as t.
class PolyST {
public:
    PolyST() = default;
    explicit PolyST(RationalFunctionQ c);
    static PolyST s_power(int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const RationalFunctionQ &leading() const { return c_.back(); }
    RationalFunctionQ coeff(int k) const;
    const std::vector<RationalFunctionQ> &coeffs() const { return c_; }

    PolyST &operator+=(const PolyST &o);
    PolyST &operator-=(const PolyST &o);
    friend PolyST operator+(PolyST a, const PolyST &b) { return a += b; }
    friend PolyST operator-(PolyST a, const PolyST &b) { return a -= b; }
    friend PolyST operator*(const PolyST &a, const PolyST &b);
    PolyST scaled(const RationalFunctionQ &c) const;
    PolyST operator-() const { return scaled(RationalFunctionQ(-1)); }
    friend bool operator==(const PolyST &a, const PolyST &b) { return a.c_ == b.c_; }

    /// Euclidean division; returns {quotient, remainder}.
    static std::pair<PolyST, PolyST> divmod(const PolyST &a, const PolyST &b);
    /// Monic gcd (zero only if both are zero).
    static PolyST gcd(PolyST a, PolyST b);
    PolyST monic() const;

    std::string to_string() const;

private:
    void trim();
    std::vector<RationalFunctionQ> c_;
};

/// Exact element of Q(s, t) as a ratio of polynomials in s over Q(t); the
/// denominator is monic in s and coprime to the numerator, so equality is
/// structural.
class RationalST {
public:
    RationalST() : den_(RationalFunctionQ(1)) {}
    RationalST(long c) : num_(RationalFunctionQ(c)), den_(RationalFunctionQ(1)) {}  // NOLINT(google-explicit-constructor)
    explicit RationalST(const mpz_class &c) : num_(RationalFunctionQ(c)), den_(RationalFunctionQ(1)) {}
    RationalST(PolyST num, PolyST den);

    static RationalST s();
    static RationalST t();
    /// Lifts an element of Q(t).
    static RationalST from_t(const RationalFunctionQ &c);

    const PolyST &num() const { return num_; }
    const PolyST &den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalST operator-() const;
    RationalST &operator+=(const RationalST &o);
    RationalST &operator-=(const RationalST &o);
    RationalST &operator*=(const RationalST &o);
    RationalST &operator/=(const RationalST &o);
    friend RationalST operator+(RationalST a, const RationalST &b) { return a += b; }
    friend RationalST operator-(RationalST a, const RationalST &b) { return a -= b; }
    friend RationalST operator*(RationalST a, const RationalST &b) { return a *= b; }
    friend RationalST operator/(RationalST a, const RationalST &b) { return a /= b; }
    friend bool operator==(const RationalST &a, const RationalST &b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RationalST &a, const RationalST &b) { return !(a == b); }

    RationalST inverse() const;
    RationalST pow(int e) const;

    /// Substitutes s = q^s_power, t = q^t_power.
    RationalFunctionQ specialize(int s_power, int t_power) const;

    std::string to_string() const;

private:
    void normalize();
    PolyST num_;
    PolyST den_;
};

}  // namespace qvertex
