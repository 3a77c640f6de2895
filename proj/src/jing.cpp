#include "qvertex/jing.hpp"

#include <stdexcept>

#include "qvertex/fock.hpp"
#include "qvertex/vops.hpp"

namespace qvertex {

namespace {

RationalST one_minus_pow(const RationalST &x, int n) { return RationalST(1) - x.pow(n); }

// exp(sum_n c(n) p_n) homogeneous parts through degree max.
std::vector<STSymFunc> exp_parts(const std::function<RationalST(int)> &c, int max)
{
    std::vector<STSymFunc> e;
    e.emplace_back(RationalST(1));
    for (int m = 1; m <= max; ++m) {
        STSymFunc acc;
        for (int n = 1; n <= m; ++n) acc += e[static_cast<std::size_t>(m - n)].times_p(n) * (RationalST(n) * c(n));
        acc *= RationalST(1) / RationalST(m);
        e.push_back(std::move(acc));
    }
    return e;
}

}  // namespace

RationalST jing_commutator(int n)
{
    if (n == 0) throw std::invalid_argument("jing_commutator: n must be nonzero");
    const int a = std::abs(n);
    return RationalST(n) * one_minus_pow(RationalST::s(), a) / one_minus_pow(RationalST::t(), a);
}

STSymFunc apply_c(int n, const STSymFunc &f)
{
    if (n == 0) throw std::invalid_argument("apply_c: the zero mode is not a Heisenberg mode");
    if (n < 0) return f.times_p(-n);
    return f.derivative(n) * jing_commutator(n);
}

RationalST jing_coeff(int n) { return one_minus_pow(RationalST::t(), n) / (RationalST(n) * one_minus_pow(RationalST::s(), n)); }

std::map<int, STSymFunc> X_series(const STSymFunc &f, int max_order, bool conjugate)
{
    const RationalST sign(conjugate ? -1 : 1);
    // annihilation part: exp(-sign sum k_n c_n z^{-n})
    std::map<int, STSymFunc> cur{{0, f}};
    for (int n = 1; n <= f.max_degree(); ++n) {
        const RationalST a = -sign * jing_coeff(n);
        std::map<int, STSymFunc> next;
        for (const auto &[e, g] : cur) {
            STSymFunc h = g;
            RationalST coef(1);
            for (int j = 0; !h.is_zero(); ++j) {
                next[e - n * j] += h * coef;
                h = apply_c(n, h);
                coef = coef * a / RationalST(j + 1);
            }
        }
        cur = std::move(next);
    }
    int low = 0;
    for (const auto &[e, g] : cur) low = std::min(low, e);
    const auto parts = exp_parts([&](int n) { return sign * jing_coeff(n); }, std::max(0, max_order - low));
    std::map<int, STSymFunc> out;
    for (const auto &[e, g] : cur)
        for (int m = 0; e + m <= max_order; ++m) {
            STSymFunc t = parts[static_cast<std::size_t>(m)] * g;
            if (!t.is_zero()) out[e + m] += t;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

STSymFunc X_mode(int n, const STSymFunc &f)
{
    const auto s = X_series(f, -n);
    auto it = s.find(-n);
    return it == s.end() ? STSymFunc() : it->second;
}

STSymFunc X_star_mode(int n, const STSymFunc &f)
{
    const auto s = X_series(f, n, true);
    auto it = s.find(n);
    return it == s.end() ? STSymFunc() : it->second;
}

RationalST inner_product_generic(const STSymFunc &f, const STSymFunc &g)
{
    return inner_product_st(f, g, RationalST::s(), RationalST::t());
}

JingReport verify_adjointness(int max_degree)
{
    JingReport rep;
    std::vector<Partition> probes;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto &la : partitions_of(d)) probes.push_back(la);
    for (const auto &lu : probes)
        for (const auto &lv : probes) {
            const int n = lu.weight() - lv.weight();
            const STSymFunc u = STSymFunc::power_sum(lu), v = STSymFunc::power_sum(lv);
            const RationalST lhs = inner_product_generic(X_mode(n, u), v);
            const RationalST rhs = inner_product_generic(u, X_star_mode(n, v));
            ++rep.checked;
            if (lhs != rhs && rep.ok) {
                rep.ok = false;
                rep.first_discrepancy = "u = p" + lu.to_string() + ", v = p" + lv.to_string();
            }
        }
    return rep;
}

JingReport verify_specialization(int max_degree)
{
    JingReport rep;
    auto fail = [&](const std::string &what) {
        if (rep.ok) rep.first_discrepancy = what;
        rep.ok = false;
    };
    for (int n = 1; n <= std::max(1, max_degree); ++n) {
        ++rep.checked;
        const RationalFunctionQ b = RationalFunctionQ(n) * (RationalFunctionQ(1) + RationalFunctionQ::q_power(2 * n));
        if (jing_commutator(n).specialize(4, 2) != b) fail("commutator at n = " + std::to_string(n));
    }
    for (int d = 0; d <= max_degree; ++d)
        for (const auto &la : partitions_of(d))
            for (int n = -max_degree; n <= max_degree; ++n) {
                if (n == 0) continue;
                ++rep.checked;
                const SymFunc c = apply_c(n, STSymFunc::power_sum(la)).map_coeffs<RationalFunctionQ>(
                    [](const RationalST &x) { return x.specialize(4, 2); });
                const SymFunc b = apply_b(n, FockState(SymFunc::power_sum(la), 0)).sym();
                if (c != b) fail("mode " + std::to_string(n) + " on p" + la.to_string());
            }
    return rep;
}

JingContrast jing_contrast(int max_n)
{
    JingContrast c{};
    c.x_conjugate_is_exponential = true;
    c.phi_plus_is_exponential = has_exponential_form(VOFamily::PhiPlus);
    c.x_lattice_shift = 0;
    c.phi_lattice_shift = lattice_shift(VOFamily::PhiMinus);
    c.x_coefficients_symmetric = true;
    c.phi_coefficients_symmetric = true;
    const RationalST q4 = RationalST::s();
    for (int n = 1; n <= max_n; ++n) {
        const RationalST f = one_minus_pow(q4, n) / one_minus_pow(RationalST::t(), n);
        const RationalST rule = RationalST(1) / (RationalST(n) * f);
        if (jing_coeff(n) != rule) c.x_coefficients_symmetric = false;
        const RationalFunctionQ phi_rule = rule.specialize(4, 2);
        if (phi_creation_coeff(n) != phi_rule || -phi_annihilation_coeff(n) != phi_rule)
            c.phi_coefficients_symmetric = false;
    }
    return c;
}

}  // namespace qvertex
