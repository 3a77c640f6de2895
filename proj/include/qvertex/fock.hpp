#pragma once

#include <stdexcept>
#include <string>

#include "qvertex/symfun.hpp"

namespace qvertex {

enum class Side { Ket, Bra };

/// Fock state sym (x) e^{k alpha/2} for kets, e^{-k alpha/2} for bras, with a
/// residual factor (-q^3)^{1/2} when sigma_twice is odd. Whole powers of
/// (-q^3) are folded into the coefficients on construction, so sigma_twice
/// is always 0 or 1. The default-constructed state is zero.
template <Side S>
class BasicFockState {
public:
    BasicFockState() = default;
    BasicFockState(SymFunc sym, int lattice_k, int sigma_twice = 0) : sym_(std::move(sym)), k_(lattice_k)
    {
        shift_sigma(sigma_twice);
    }
    static BasicFockState vacuum() { return BasicFockState(SymFunc(RationalFunctionQ(1)), 0); }

    const SymFunc &sym() const { return sym_; }
    int lattice_k() const { return k_; }
    int sigma_twice() const { return sigma_; }
    bool is_zero() const { return sym_.is_zero(); }
    int degree() const { return sym_.max_degree(); }

    /// Multiplies by (-q^3)^{shift/2}.
    void shift_sigma(int shift)
    {
        int total = sigma_ + shift;
        int whole = total >= 0 ? total / 2 : -((1 - total) / 2);
        sigma_ = total - 2 * whole;
        if (whole != 0) sym_ *= RationalFunctionQ::monomial(whole % 2 == 0 ? 1 : -1, 3 * whole);
    }
    void set_lattice(int k) { k_ = k; }
    BasicFockState with_sym(SymFunc sym) const
    {
        BasicFockState s = *this;
        s.sym_ = std::move(sym);
        return s;
    }

    BasicFockState &operator+=(const BasicFockState &o)
    {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (k_ != o.k_ || sigma_ != o.sigma_)
            throw std::invalid_argument("FockState: adding states from different lattice or sigma sectors");
        sym_ += o.sym_;
        return *this;
    }
    BasicFockState &operator-=(const BasicFockState &o) { return *this += o * RationalFunctionQ(-1); }
    BasicFockState &operator*=(const RationalFunctionQ &c)
    {
        sym_ *= c;
        return *this;
    }
    friend BasicFockState operator+(BasicFockState a, const BasicFockState &b) { return a += b; }
    friend BasicFockState operator-(BasicFockState a, const BasicFockState &b) { return a -= b; }
    friend BasicFockState operator*(BasicFockState a, const RationalFunctionQ &c) { return a *= c; }
    friend bool operator==(const BasicFockState &a, const BasicFockState &b)
    {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.k_ == b.k_ && a.sigma_ == b.sigma_ && a.sym_ == b.sym_;
    }
    friend bool operator!=(const BasicFockState &a, const BasicFockState &b) { return !(a == b); }

    std::string to_string() const
    {
        std::string s = "(" + sym_.to_string() + ")";
        if (k_ != 0) s += (S == Side::Ket ? "*e^{" : "*e^{-") + std::to_string(k_) + "a/2}";
        if (sigma_ != 0) s += "*(-q^3)^{1/2}";
        return s;
    }

private:
    SymFunc sym_;
    int k_ = 0;
    int sigma_ = 0;
};

using FockState = BasicFockState<Side::Ket>;
using DualFockState = BasicFockState<Side::Bra>;

/// b_n acting on a ket: creation for n < 0, n(1+q^{2n}) d/dp_n for n > 0.
FockState apply_b(int n, const FockState &state);
/// Right action of b_n on a bra: multiplication for n > 0, derivation for n < 0.
DualFockState apply_b(int n, const DualFockState &state);

/// [n] q^{-|n|} / n, so that a_n = a_to_b_factor(n) b_n.
RationalFunctionQ a_to_b_factor(int n);

/// e^{j alpha/2} on a ket (k -> k + j) or from the right on a bra (k -> k - j).
FockState apply_exp_alpha_half(int j, const FockState &state);
DualFockState apply_exp_alpha_half(int j, const DualFockState &state);

/// The eigenvalue of the zero mode d on a lattice-homogeneous state.
template <Side S>
int momentum_eigenvalue(const BasicFockState<S> &state)
{
    return state.lattice_k();
}

/// <dual | state>: lattice sectors orthonormal, power sums paired by z_la(q).
RationalFunctionQ pairing(const DualFockState &dual, const FockState &state);

}  // namespace qvertex
