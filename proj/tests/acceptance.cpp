// Acceptance run: one PASS/FAIL line per criterion, exact equality throughout.
// Usage: acceptance [path-to-qvertex-cli]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>

#include "qvertex/identities.hpp"
#include "qvertex/jing.hpp"
#include "qvertex/vops.hpp"

using namespace qvertex;

namespace {

RationalFunctionQ q(int k) { return RationalFunctionQ::q_power(k); }

bool one_row()
{
    const FockSeries s = phi_minus_series(0, FockState::vacuum(), 8);
    for (int n = 1; n <= 8; ++n)
        if (coefficient_at(s, {2 * n, 0}) != FockState(one_row_Z(n) * q(4 * n), 1)) return false;
    return true;
}

bool two_row()
{
    const PowerSeriesX c = cn_series(12);
    for (int r = 1; r <= 5; ++r)
        for (int s = 1; r + s <= 6; ++s) {
            RowCombination acc;
            RowCombination term = RowCombination::single(r - 1, s);
            for (int n = 0; !term.is_zero(); ++n, term = raising_R(term)) acc += term * c[n];
            const FockState closed(acc.expand() * -q(4 * (r + s) - 1), 2);
            if (two_row_vos_composed(r, s) != closed) return false;
            if (two_row_vos_ope(r, s) != closed) return false;
        }
    return true;
}

bool dual_one_row()
{
    const DualFockSeries res = phi_plus_dual_vacuum_residue(8);
    const DualFockSeries dir = phi_plus_dual_vacuum_direct(8);
    if (!differing_keys(res, dir).empty()) return false;
    for (int n = 0; n <= 8; ++n)
        if (coefficient_at(res, {-2 * n, 0}) != DualFockState(one_row_Z(n), 1)) return false;
    return true;
}

bool scalar_product()
{
    for (int n = 0; n <= 6; ++n) {
        RationalFunctionQ norm;
        for (const Partition &la : partitions_of(n)) norm += RationalFunctionQ(1) / z_q(la);
        for (int m = 0; m <= 6; ++m)
            if (inner_product_q(one_row_Z(n), one_row_Z(m)) != (n == m ? norm : RationalFunctionQ())) return false;
    }
    return true;
}

bool qkz()
{
    const int order = 8;
    const PowerSeriesX expect = poch_inf_series(q(6), q(4), order) / poch_inf_series(q(4), q(4), order);
    const DualFockSeries bras = phi_plus_on_dual_vacuum(order);
    const FockSeries kets = phi_minus_series(0, FockState::vacuum(), order);
    for (int m = 0; m <= order; ++m)
        for (int n = 0; n <= order; ++n) {
            const RationalFunctionQ v = pairing(coefficient_at(bras, {-2 * m, 0}), coefficient_at(kets, {2 * n, 0}));
            if (v != (m == n ? expect[n] : RationalFunctionQ())) return false;
        }
    return true;
}

bool ope()
{
    for (OpeKind k : {OpeKind::PhiPhi, OpeKind::EPhi, OpeKind::PhiE, OpeKind::EE})
        if (!verify_ope(k, 6).ok) return false;
    return true;
}

bool jj()
{
    const RationalFunctionQ s = q(4), t = q(2);
    for (int w = 1; w <= 6; ++w)
        for (int m = 0; 2 * m <= w; ++m) {
            const int r = w - m;
            const SymFunc z = two_row_Z(r, m);
            if (!collinear_ratio(z, macdonald_P(Partition::from_unsorted({r, m}), s, t))) return false;
            if (qzonal_from_vos(r + 1, m) != z) return false;
            if (dual_qzonal_from_vos(r + 1, m) != z) return false;
        }
    return true;
}

bool cn()
{
    const PowerSeriesX a = cn_by_pochhammer_ratio(10);
    return a == cn_by_exponential(10) && a == cn_by_partition_sum(10);
}

bool zonal()
{
    for (int n = 1; n <= 5; ++n) {
        const SymFunc p = specialize_q1(macdonald_P(Partition({n}), q(4), q(2)));
        if (!collinear_ratio(p, jack_P(Partition({n}), 2))) return false;
    }
    return true;
}

bool jing() { return verify_adjointness(4).ok && verify_specialization(4).ok; }

std::string capture(const std::string &cmd)
{
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE *)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    return out;
}

std::string cli;

bool determinism()
{
    if (!cli.empty()) {
        const std::string cmd = "\"" + cli + "\" verify all --order 6";
        const std::string a = capture(cmd), b = capture(cmd);
        return !a.empty() && a == b;
    }
    auto report = [] {
        json out = json::array();
        for (const auto &name : identity_names()) out.push_back(to_json(run_identity(name, 6)));
        return out.dump(2);
    };
    return report() == report();
}

}  // namespace

int main(int argc, char **argv)
{
    if (argc > 1) cli = argv[1];
    const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
        {"one-row VOS, n <= 8", one_row},
        {"two-row VOS, r + s <= 6", two_row},
        {"dual one-row, residue and direct routes, order 8", dual_one_row},
        {"scalar product of one-row functions, n, m <= 6", scalar_product},
        {"q-KZ matrix element, order 8", qkz},
        {"operator products, degree 6", ope},
        {"JJ collinearity and reconstruction, r + m <= 6", jj},
        {"C coefficients, three routes, order 10", cn},
        {"zonal limit, n <= 5", zonal},
        {"Jing adjointness and specialization, degree 4", jing},
        {"determinism of verify all --order 6", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string err;
        try {
            ok = criteria[i].second();
        } catch (const std::exception &e) {
            err = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "criterion " << std::setw(2) << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << "  (" << std::fixed << std::setprecision(2) << secs << " s)";
        if (!err.empty()) std::cout << "  error: " << err;
        std::cout << std::endl;
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
