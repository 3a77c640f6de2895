#include "qvertex/identities.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "qvertex/jing.hpp"
#include "qvertex/vops.hpp"

namespace qvertex {

namespace {

struct Recorder {
    IdentityReport &rep;
    void check(bool ok, const std::string &where)
    {
        ++rep.checked;
        if (!ok && rep.ok) {
            rep.ok = false;
            rep.first_discrepancy = where;
        }
    }
};

std::string idx(int a) { return "(" + std::to_string(a) + ")"; }
std::string idx(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

void check_ope(Recorder &r, int order, int)
{
    for (OpeKind k : {OpeKind::PhiPhi, OpeKind::EPhi, OpeKind::PhiE, OpeKind::EE}) {
        const OpeCheck c = verify_ope(k, order);
        r.rep.checked += c.compared - 1;
        r.check(c.ok, std::string(ope_name(k)) + ": " + c.first_discrepancy);
    }
}

void check_one_row(Recorder &r, int order, int)
{
    const FockSeries s = phi_minus_series(0, FockState::vacuum(), order);
    for (int n = 1; n <= order; ++n) r.check(coefficient_at(s, {2 * n, 0}) == one_row_vos(n), "n = " + std::to_string(n));
}

void check_two_row(Recorder &r, int order, int)
{
    for (int a = 1; a < order; ++a)
        for (int b = 1; a + b <= order; ++b) {
            const FockState closed = two_row_vos_closed(a, b);
            r.check(closed.lattice_k() == 2 && closed.sigma_twice() == 0, "closed form shape at " + idx(a, b));
            r.check(two_row_vos_composed(a, b) == closed, "composition at " + idx(a, b));
            r.check(two_row_vos_ope(a, b) == closed, "operator product route at " + idx(a, b));
        }
}

void check_dual_residue(Recorder &r, int order, int)
{
    const DualFockSeries res = phi_plus_dual_vacuum_residue(order);
    const DualFockSeries dir = phi_plus_dual_vacuum_direct(order);
    const auto diff = differing_keys(res, dir);
    r.check(diff.empty(), diff.empty() ? "" : "routes differ at eta^" + std::to_string(diff.front()[0] / 2));
    for (int n = 0; n <= order; ++n) r.check(coefficient_at(res, {-2 * n, 0}) == dual_one_row_vos(n), "eta^-" + std::to_string(n));
}

void check_dual_two_row(Recorder &r, int order, int)
{
    for (int a = 0; a < order; ++a)
        for (int b = 1; a + b <= order; ++b)
            r.check(dual_two_row_vos_engine(a, b) == dual_two_row_vos_closed(a, b), "engine at " + idx(a, b));
}

void check_scalar_product(Recorder &r, int order, int)
{
    for (int n = 0; n <= order; ++n)
        for (int m = 0; m <= order; ++m) {
            const RationalFunctionQ expect = n == m ? z_inverse_sum(n) : RationalFunctionQ();
            r.check(inner_product_q(one_row_Z(n), one_row_Z(m)) == expect, "<Z_n, Z_m> at " + idx(n, m));
        }
}

void check_qkz(Recorder &r, int order, int)
{
    const DualFockSeries duals = phi_plus_on_dual_vacuum(order);
    const PowerSeriesX expect =
        poch_inf_series(RationalFunctionQ::q_power(6), RationalFunctionQ::q_power(4), order) /
        poch_inf_series(RationalFunctionQ::q_power(4), RationalFunctionQ::q_power(4), order);
    std::vector<FockState> kets;
    for (int n = 0; n <= order; ++n) kets.push_back(one_row_vos_extracted(n));
    for (int m = 0; m <= order; ++m) {
        const DualFockState bra = coefficient_at(duals, {-2 * m, 0});
        for (int n = 0; n <= order; ++n) {
            const RationalFunctionQ v = pairing(bra, kets[static_cast<std::size_t>(n)]);
            const RationalFunctionQ want = m == n ? expect[n] : RationalFunctionQ();
            r.check(v == want, "matrix element " + idx(m, n));
        }
    }
}

void check_jj(Recorder &r, int, int weight)
{
    for (int n = 1; n <= weight; ++n) {
        const std::function<RationalFunctionQ(const Partition &)> w = [](const Partition &la) { return z_q(la); };
        const auto basis = gram_schmidt_basis<RationalFunctionQ>(n, w);
        for (auto i = basis.begin(); i != basis.end(); ++i)
            for (auto j = std::next(i); j != basis.end(); ++j)
                r.check(inner_product_q(i->second, j->second).is_zero(),
                        "orthogonality of P" + i->first.to_string() + ", P" + j->first.to_string());
        r.check(collinear_ratio(one_row_Z(n), basis.at(Partition{n})).has_value(), "one-row Z" + idx(n));
        for (int m = 1; 2 * m <= n; ++m) {
            const int a = n - m;
            r.check(collinear_ratio(two_row_Z(a, m), basis.at(Partition{a, m})).has_value(), "two-row Z" + idx(a, m));
        }
    }
}

void check_reconstruction(Recorder &r, int, int weight)
{
    for (int n = 1; n <= weight + 1; ++n)
        for (int m = 0; m <= n - 1 && n - 1 + m <= weight; ++m) {
            const SymFunc z = two_row_Z(n - 1, m);
            r.check(qzonal_from_vos(n, m) == z, "ket route at " + idx(n, m));
            r.check(dual_qzonal_from_vos(n, m) == z, "dual route at " + idx(n, m));
        }
}

void check_cn(Recorder &r, int order, int)
{
    const PowerSeriesX a = cn_by_pochhammer_ratio(order);
    const PowerSeriesX b = cn_by_exponential(order);
    const PowerSeriesX c = cn_by_partition_sum(order);
    for (int n = 0; n <= order; ++n) {
        r.check(a[n] == b[n], "ratio vs exponential at x^" + std::to_string(n));
        r.check(a[n] == c[n], "ratio vs partition sum at x^" + std::to_string(n));
    }
}

void check_zonal(Recorder &r, int, int weight)
{
    for (int n = 1; n <= weight; ++n) {
        const SymFunc p = specialize_q1(macdonald_P(Partition{n}, RationalFunctionQ::q_power(4), RationalFunctionQ::q_power(2)));
        r.check(collinear_ratio(p, jack_P(Partition{n}, 2)).has_value(), "P" + idx(n) + " at q = 1");
    }
}

void check_jing(Recorder &r, int order, int)
{
    const int degree = std::min(order, 4);
    const JingReport adj = verify_adjointness(degree);
    r.rep.checked += adj.checked - 1;
    r.check(adj.ok, "adjointness: " + adj.first_discrepancy);
    const JingReport sp = verify_specialization(degree);
    r.rep.checked += sp.checked - 1;
    r.check(sp.ok, "specialization: " + sp.first_discrepancy);
    const JingContrast c = jing_contrast(std::max(1, degree));
    r.check(c.x_conjugate_is_exponential && !c.phi_plus_is_exponential, "contrast: exponential form");
    r.check(c.x_lattice_shift == 0 && c.phi_lattice_shift != 0, "contrast: zero modes");
    r.check(c.x_coefficients_symmetric && !c.phi_coefficients_symmetric, "contrast: coefficient rule");
}

using Check = void (*)(Recorder &, int, int);

const std::map<std::string, Check> &checks()
{
    static const std::map<std::string, Check> m{
        {"cn", check_cn},
        {"dual-residue", check_dual_residue},
        {"dual-two-row", check_dual_two_row},
        {"jing", check_jing},
        {"jj", check_jj},
        {"one-row", check_one_row},
        {"ope", check_ope},
        {"qkz", check_qkz},
        {"reconstruction", check_reconstruction},
        {"scalar-product", check_scalar_product},
        {"two-row", check_two_row},
        {"zonal", check_zonal},
    };
    return m;
}

}  // namespace

const std::vector<std::string> &identity_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto &[k, f] : checks()) v.push_back(k);
        return v;
    }();
    return names;
}

IdentityReport run_identity(const std::string &name, int order, std::optional<int> max_weight)
{
    auto it = checks().find(name);
    if (it == checks().end()) throw std::invalid_argument("unknown identity: " + name);
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    const int weight = max_weight.value_or(order);
    if (weight < 0) throw std::invalid_argument("max weight must be >= 0");
    IdentityReport rep;
    rep.identity = name;
    rep.order = order;
    Recorder r{rep};
    try {
        it->second(r, order, weight);
    } catch (const std::logic_error &e) {
        rep.ok = false;
        if (rep.first_discrepancy.empty()) rep.first_discrepancy = e.what();
    }
    return rep;
}

json to_json(const IdentityReport &r)
{
    json j{{"identity", r.identity}, {"order", r.order}, {"status", r.ok ? "ok" : "fail"}};
    j["first_discrepancy"] = r.ok ? json(nullptr) : json(r.first_discrepancy);
    return j;
}

}  // namespace qvertex
