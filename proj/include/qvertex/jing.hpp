#pragma once

#include <map>
#include <string>
#include <vector>

#include "qvertex/bivariate.hpp"
#include "qvertex/symfun.hpp"

namespace qvertex {

/// Fock content for the c-modes, coefficients in Q(s, t).
using STSymFunc = SymFuncT<RationalST>;

/// n (1 - s^|n|) / (1 - t^|n|), the c-mode commutator.
RationalST jing_commutator(int n);

/// c_n: multiplication by p_{-n} for n < 0, jing_commutator(n) d/dp_n for n > 0.
STSymFunc apply_c(int n, const STSymFunc &f);

/// (1 - t^n) / (n (1 - s^n)).
RationalST jing_coeff(int n);

/// X(z) f, or X*(z) f when `conjugate`, as exponent -> content for exponents
/// up to max_order (all negative exponents are kept).
std::map<int, STSymFunc> X_series(const STSymFunc &f, int max_order, bool conjugate = false);
inline std::map<int, STSymFunc> X_star_series(const STSymFunc &f, int max_order)
{
    return X_series(f, max_order, true);
}

/// Coefficient of z^{-n} in X(z) f.
STSymFunc X_mode(int n, const STSymFunc &f);
/// Coefficient of z^{n} in X*(z) f.
STSymFunc X_star_mode(int n, const STSymFunc &f);

/// <f, g>_{s,t}.
RationalST inner_product_generic(const STSymFunc &f, const STSymFunc &g);

/// Result of a Jing check.
struct JingReport {
    bool ok = true;
    int checked = 0;
    std::string first_discrepancy;
};

/// <X_n u, v> = <u, X*_n v> on power sums u, v of degree <= max_degree.
JingReport verify_adjointness(int max_degree);

/// At s = q^4, t = q^2 the commutator equals n(1 + q^{2n}) and apply_c
/// agrees with apply_b on power sums of degree <= max_degree.
JingReport verify_specialization(int max_degree);

/// The structural contrasts between X and the intertwining operator phi.
struct JingContrast {
    bool x_conjugate_is_exponential;
    bool phi_plus_is_exponential;
    int x_lattice_shift;
    int phi_lattice_shift;
    bool x_coefficients_symmetric;    // creation = annihilation = 1/(n f(s^n, t^n))
    bool phi_coefficients_symmetric;  // same rule at s = q^4, t = q^2
};
JingContrast jing_contrast(int max_n);

}  // namespace qvertex
