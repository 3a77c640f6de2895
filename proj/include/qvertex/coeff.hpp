#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qvertex/rational.hpp"

namespace qvertex {

/// Truncated power series sum_{n <= order} c_n x^n over Q(q).
class PowerSeriesX {
public:
    explicit PowerSeriesX(int order = 0);
    PowerSeriesX(int order, std::vector<RationalFunctionQ> coeffs);

    static PowerSeriesX one(int order);
    /// Geometric series sum_k (c x)^k.
    static PowerSeriesX geometric(const RationalFunctionQ &c, int order);

    int order() const { return order_; }
    const RationalFunctionQ &operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    RationalFunctionQ coeff(int n) const;
    void set(int n, RationalFunctionQ c);
    const std::vector<RationalFunctionQ> &coeffs() const { return coeffs_; }

    PowerSeriesX truncated(int order) const;
    /// x -> c x
    PowerSeriesX rescaled(const RationalFunctionQ &c) const;
    PowerSeriesX inverse() const;
    /// exp of a series with zero constant term.
    PowerSeriesX exp() const;

    PowerSeriesX &operator+=(const PowerSeriesX &o);
    PowerSeriesX &operator-=(const PowerSeriesX &o);
    PowerSeriesX &operator*=(const RationalFunctionQ &c);
    friend PowerSeriesX operator+(PowerSeriesX a, const PowerSeriesX &b) { return a += b; }
    friend PowerSeriesX operator-(PowerSeriesX a, const PowerSeriesX &b) { return a -= b; }
    friend PowerSeriesX operator*(const PowerSeriesX &a, const PowerSeriesX &b);
    friend PowerSeriesX operator/(const PowerSeriesX &a, const PowerSeriesX &b) { return a * b.inverse(); }
    friend bool operator==(const PowerSeriesX &a, const PowerSeriesX &b);
    friend bool operator!=(const PowerSeriesX &a, const PowerSeriesX &b) { return !(a == b); }

    std::string to_string(const char *var = "x") const;

private:
    int order_;
    std::vector<RationalFunctionQ> coeffs_;
};

/// Finite q-Pochhammer (a; p)_n = prod_{k<n} (1 - a p^k).
RationalFunctionQ poch_finite(const RationalFunctionQ &a, const RationalFunctionQ &p, int n);

/// (a x; p)_infinity expanded in x through x^order by Euler's formula.
/// Internally checked against the product of the first `order` factors
/// times the Euler expansion of the remaining tail.
PowerSeriesX poch_inf_series(const RationalFunctionQ &a, const RationalFunctionQ &p, int order);

/// The three routes to sum_n C_n x^n = (q^2 x; q^4)_inf / (q^4 x; q^4)_inf.
PowerSeriesX cn_by_pochhammer_ratio(int order);
PowerSeriesX cn_by_exponential(int order);
PowerSeriesX cn_by_partition_sum(int order);

/// C_n series; all three routes must agree or std::logic_error is thrown.
PowerSeriesX cn_series(int order);

/// Coefficients of the inverse operator ratio (x; q^4)_inf / (q^2 x; q^4)_inf.
PowerSeriesX inverse_cn_series(int order);

}  // namespace qvertex
