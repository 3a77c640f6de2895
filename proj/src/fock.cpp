#include "qvertex/fock.hpp"

#include <stdexcept>

namespace qvertex {

FockState apply_b(int n, const FockState &state)
{
    if (n == 0) throw std::invalid_argument("apply_b: the zero mode is not a Heisenberg mode");
    if (n < 0) return state.with_sym(state.sym().times_p(-n));
    return state.with_sym(heisenberg_derivative(n, state.sym()));
}

DualFockState apply_b(int n, const DualFockState &state)
{
    if (n == 0) throw std::invalid_argument("apply_b: the zero mode is not a Heisenberg mode");
    if (n > 0) return state.with_sym(state.sym().times_p(n));
    return state.with_sym(heisenberg_derivative(-n, state.sym()));
}

RationalFunctionQ a_to_b_factor(int n)
{
    if (n == 0) throw std::invalid_argument("a_to_b_factor: n must be nonzero");
    return qint(n) * RationalFunctionQ::q_power(-std::abs(n)) / RationalFunctionQ(n);
}

FockState apply_exp_alpha_half(int j, const FockState &state)
{
    FockState s = state;
    s.set_lattice(state.lattice_k() + j);
    return s;
}

DualFockState apply_exp_alpha_half(int j, const DualFockState &state)
{
    DualFockState s = state;
    s.set_lattice(state.lattice_k() - j);
    return s;
}

RationalFunctionQ pairing(const DualFockState &dual, const FockState &state)
{
    const int sigma = dual.sigma_twice() + state.sigma_twice();
    if (sigma % 2 != 0) throw std::domain_error("pairing: non-integral total sigma grade");
    if (dual.is_zero() || state.is_zero() || dual.lattice_k() != state.lattice_k()) return {};
    RationalFunctionQ v = inner_product_q(dual.sym(), state.sym());
    if (sigma == 2) v *= RationalFunctionQ::monomial(-1, 3);
    return v;
}

}  // namespace qvertex
