#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qvertex {

/// Laurent polynomial in a formal variable q with arbitrary-precision
/// integer coefficients.
///
/// Stored densely from the lowest nonzero exponent; the first and last
/// stored coefficients are always nonzero, so the zero polynomial has no
/// storage at all.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(mpz_class c);

    static LaurentPoly monomial(mpz_class c, int exponent);
    static LaurentPoly from_terms(const std::map<int, mpz_class> &terms);
    /// Builds from dense coefficients starting at `low`.
    static LaurentPoly from_dense(int low, std::vector<mpz_class> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
    bool is_monomial() const { return coeffs_.size() == 1; }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    int low() const { return low_; }
    /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
    int high() const { return is_zero() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }
    std::size_t term_count() const;

    mpz_class coeff(int exponent) const;
    const mpz_class &lowest_coeff() const { return coeffs_.front(); }
    const mpz_class &leading_coeff() const { return coeffs_.back(); }
    const std::vector<mpz_class> &dense() const { return coeffs_; }

    /// Nonzero terms in strictly increasing exponent order.
    std::vector<std::pair<int, mpz_class>> terms() const;

    /// Nonnegative gcd of all coefficients (0 for the zero polynomial).
    mpz_class content() const;

    LaurentPoly shifted(int by) const;
    /// q -> q^k for nonzero k.
    LaurentPoly substitute_power(int k) const;
    mpq_class evaluate(const mpq_class &q) const;

    LaurentPoly operator-() const;
    LaurentPoly &operator+=(const LaurentPoly &o);
    LaurentPoly &operator-=(const LaurentPoly &o);
    LaurentPoly &operator*=(const LaurentPoly &o);
    LaurentPoly &operator*=(const mpz_class &c);
    /// Exact division of every coefficient by `c`.
    LaurentPoly &divexact(const mpz_class &c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b)
    {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly &a, const LaurentPoly &b) { return !(a == b); }

    /// Human-readable form such as "2*q^-1 + 3 - q^4".
    std::string to_string(const char *var = "q") const;

private:
    void trim();

    int low_ = 0;
    std::vector<mpz_class> coeffs_;
};

namespace detail {

/// Greatest common divisor of two polynomials (exponents must be >= 0),
/// normalized so that its lowest coefficient is positive. Content is
/// included, i.e. gcd(6, 4q + 2) = 2.
LaurentPoly poly_gcd(const LaurentPoly &a, const LaurentPoly &b);

/// Exact quotient a / b of polynomials with b | a in Z[q, q^-1].
LaurentPoly poly_divexact(const LaurentPoly &a, const LaurentPoly &b);

}  // namespace detail

}  // namespace qvertex
