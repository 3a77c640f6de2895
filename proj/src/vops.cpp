#include "qvertex/vops.hpp"

#include <stdexcept>

namespace qvertex {

namespace {

RationalFunctionQ Q1() { return RationalFunctionQ(1); }
RationalFunctionQ qp(int e) { return RationalFunctionQ::q_power(e); }

// q - q^{-1}
RationalFunctionQ bracket_unit() { return qp(1) - qp(-1); }

ExpansionRegion one_var_region(const std::string &v) { return {{v}, ""}; }
ExpansionRegion zw_region() { return {{"z", "w"}, "|zq^4| < |w| < |zq^2|"}; }

void check_ket_sector(int i, int k)
{
    if (i != 0 && i != 1) throw std::invalid_argument("sector must be 0 or 1");
    if (((k - i) % 2 + 2) % 2 != 0)
        throw std::invalid_argument("phi^{" + std::to_string(i) + ",-} does not act on lattice " + std::to_string(k));
}

void check_bra_sector(int i, int k)
{
    if (i != 0 && i != 1) throw std::invalid_argument("sector must be 0 or 1");
    if (((k + 1 - i) % 2 + 2) % 2 != 0)
        throw std::invalid_argument("phi^{" + std::to_string(i) + ",+} does not act on dual lattice " + std::to_string(k));
}

RationalFunctionQ inv_n(int n) { return Q1() / RationalFunctionQ(n); }

// 1 / (n (1 + q^{2n}))
RationalFunctionQ one_row_coeff(int n) { return Q1() / (RationalFunctionQ(n) * (Q1() + qp(2 * n))); }

struct Parts {
    std::vector<OpFactor> cre, ann, zero;
    int lattice = 0;
};

Parts phi_parts(int i, int var)
{
    return {{OpFactor::creation(var, phi_creation_coeff)},
            {OpFactor::annihilation(var, phi_annihilation_coeff)},
            {OpFactor::zero_mode(var, 1, i, 1, i)},
            1};
}

Parts e_parts(int var)
{
    return {{OpFactor::creation(var, [](int n) { return -inv_n(n); })},
            {OpFactor::annihilation(var, inv_n)},
            {OpFactor::zero_mode(var, -2, 0, 0, 0)},
            -2};
}

OperatorWord assemble(const Parts &p)
{
    OperatorWord w;
    for (const auto &f : p.cre) w.factors.push_back(f);
    for (const auto &f : p.ann) w.factors.push_back(f);
    w.factors.push_back(OpFactor::lattice_shift(p.lattice));
    for (const auto &f : p.zero) w.factors.push_back(f);
    return w;
}

// Degree of a content as a polynomial in the power sums; 0 for the zero state.
int content_degree(const SymFunc &f) { return std::max(0, f.max_degree()); }

}  // namespace

bool has_exponential_form(VOFamily family) { return family != VOFamily::PhiPlus; }

int lattice_shift(VOFamily family)
{
    switch (family) {
    case VOFamily::PhiMinus: return 1;
    case VOFamily::PhiPlus: return -1;
    case VOFamily::EMinus: return -2;
    case VOFamily::NormalOrderedPhiE: return -1;
    }
    return 0;
}

RationalFunctionQ phi_creation_coeff(int n) { return qp(4 * n) * one_row_coeff(n); }
RationalFunctionQ phi_annihilation_coeff(int n) { return -(qp(-2 * n) * one_row_coeff(n)); }

OperatorWord phi_minus_word(int i, int var) { return assemble(phi_parts(i, var)); }
OperatorWord e_minus_word(int var) { return assemble(e_parts(var)); }

OperatorWord normal_ordered_word(OpeKind kind, int i, int j, int zvar, int wvar)
{
    Parts a, b;
    switch (kind) {
    case OpeKind::PhiPhi:
        a = phi_parts(i, zvar);
        b = phi_parts(j, wvar);
        break;
    case OpeKind::EPhi:
        a = e_parts(zvar);
        b = phi_parts(j, wvar);
        break;
    case OpeKind::PhiE:
        a = phi_parts(i, zvar);
        b = e_parts(wvar);
        break;
    case OpeKind::EE:
        a = e_parts(zvar);
        b = e_parts(wvar);
        break;
    }
    Parts c;
    c.cre = a.cre;
    c.cre.insert(c.cre.end(), b.cre.begin(), b.cre.end());
    c.ann = a.ann;
    c.ann.insert(c.ann.end(), b.ann.begin(), b.ann.end());
    c.zero = a.zero;
    c.zero.insert(c.zero.end(), b.zero.begin(), b.zero.end());
    c.lattice = a.lattice + b.lattice;
    return assemble(c);
}

FockSeries phi_minus_series(int i, const FockState &state, int max_order)
{
    check_ket_sector(i, state.lattice_k());
    FockSeries in = FockSeries::constant({"z"}, one_var_region("z"), state);
    const Window w = Window::upper(max_order);
    return apply_word(phi_minus_word(i, 0), in, w).filtered(w);
}

FockSeries e_minus_series(const FockState &state, int max_order)
{
    FockSeries in = FockSeries::constant({"z"}, one_var_region("z"), state);
    const Window w = Window::upper(max_order);
    return apply_word(e_minus_word(0), in, w).filtered(w);
}

FockSeries normal_ordered_phi_E(int i, const FockState &state, const Window &window)
{
    check_ket_sector(i, state.lattice_k());
    FockSeries in = FockSeries::constant({"z", "w"}, zw_region(), state);
    return apply_word(normal_ordered_word(OpeKind::PhiE, i, 0), in, window).filtered(window);
}

DualFockSeries normal_ordered_phi_E(int i, const DualFockState &state, const Window &window)
{
    DualFockSeries in = DualFockSeries::constant({"z", "w"}, zw_region(), state);
    return apply_word(normal_ordered_word(OpeKind::PhiE, i, 0), in, window).filtered(window);
}

FockState one_row_vos(int n)
{
    if (n < 0) throw std::invalid_argument("one_row_vos: n must be >= 0");
    return FockState(one_row_Z(n) * qp(4 * n), 1);
}

FockState one_row_vos_extracted(int n)
{
    if (n < 0) throw std::invalid_argument("one_row_vos_extracted: n must be >= 0");
    return coefficient_at(phi_minus_series(0, FockState::vacuum(), n), {2 * n, 0});
}

DualFockState dual_one_row_vos(int n)
{
    if (n < 0) throw std::invalid_argument("dual_one_row_vos: n must be >= 0");
    return DualFockState(one_row_Z(n), 1);
}

namespace {

// 1.:phi^{1,-}(eta) E^-(w): as a series in eta and w, keeping what survives
// once w^{-1} = xi is taken to order `order` in eta.
DualFockSeries dual_vacuum_integrand(int order)
{
    Window w;
    w.lo[0] = 2 - 2 * order;
    w.lo[1] = -2 - 2 * order;
    w.total_lo = -2 * order;
    return normal_ordered_phi_E(1, DualFockState::vacuum(), w);
}

DualFockSeries eta_series(int order)
{
    Window w;
    w.lo[0] = -2 * order;
    return DualFockSeries({"eta"}, one_var_region("eta"), w);
}

}  // namespace

DualFockSeries phi_plus_dual_vacuum_residue(int order)
{
    // With w = 1/xi the integrand is -Q N(xi) / (xi eta^2 q^6 (xi - a)(xi - b)),
    // a = eta^{-1} q^{-2}, b = eta^{-1} q^{-4}. Only xi = a lies inside.
    // 1/(a (a - b) eta^2 q^6) = 1/(q^6 (q^{-4} - q^{-6})), free of eta.
    const RationalFunctionQ factor = -bracket_unit() / (qp(6) * (qp(-4) - qp(-6)));
    DualFockSeries out = eta_series(order);
    const DualFockSeries integrand = dual_vacuum_integrand(order);
    for (const auto &[k, s] : integrand.terms()) {
        // w^{W/2} = xi^{-W/2} -> a^{-W/2} = eta^{W/2} q^{W}
        const ExpKey key{k[0] + k[1], 0};
        if (!out.window().admits(key)) continue;
        out.add(key, s * (qp(k[1]) * factor));
    }
    return out;
}

DualFockSeries phi_plus_dual_vacuum_direct(int order)
{
    // Annulus |a| < |xi| < |b|: 1/(xi - a) = sum_j a^j xi^{-j-1} and
    // 1/(xi - b) = -sum_l b^{-l-1} xi^l. The coefficient of xi^{-1} pairs
    // xi^m from N(xi)/xi with j = m + l. The sum over l is taken explicitly
    // to `partial` terms and the geometric tail in (a/b)^l = q^{2l} closed.
    constexpr int partial = 3;
    RationalFunctionQ lsum;
    for (int l = 0; l <= partial; ++l) lsum += qp(2 * l);
    lsum += qp(2 * (partial + 1)) / (Q1() - qp(2));
    DualFockSeries out = eta_series(order);
    const DualFockSeries integrand = dual_vacuum_integrand(order);
    for (const auto &[k, s] : integrand.terms()) {
        // N(xi)/xi at xi^m, m = -W/2 - 1
        const int m = -k[1] / 2 - 1;
        if (m < 0) throw std::logic_error("phi_plus_dual_vacuum_direct: pole at xi = 0");
        // a^m b^{-1} = eta^{1-m} q^{4-2m}; overall -Q / (eta^2 q^6) and the minus of 1/(xi - b)
        const ExpKey key{k[0] + 2 * (1 - m) - 4, 0};
        if (!out.window().admits(key)) continue;
        RationalFunctionQ c = bracket_unit() * qp(4 - 2 * m) * lsum / qp(6);
        out.add(key, s * c);
    }
    return out;
}

DualFockSeries phi_plus_on_dual_vacuum(int order)
{
    DualFockSeries a = phi_plus_dual_vacuum_residue(order);
    DualFockSeries b = phi_plus_dual_vacuum_direct(order);
    if (!(a == b)) throw std::logic_error("phi_plus_on_dual_vacuum: residue and direct routes differ");
    return a;
}

DualFockSeries phi_plus_on_dual(int i, const DualFockState &bra, int lowest)
{
    const int k = bra.lattice_k();
    check_bra_sector(i, k);
    const int k1 = k + 1;
    const int shift = (k1 + i) / 2;
    const int lo = lowest - shift;
    const SymFunc &f = bra.sym();
    const int d = content_degree(f);

    std::map<int, SymFunc> acc;

    // Residue at w = theta q^2.
    {
        const auto t = translate_power_sums(f, [](int n) { return -qp(2 * n); });
        int top = 0;
        for (const auto &[e, g] : t) top = std::max(top, e);
        const int mmax = std::max(0, top - k1 - lo);
        const auto ex = exp_power_sum_parts(one_row_coeff, mmax);
        const RationalFunctionQ scalar = qp(-2 * k1) / (Q1() - qp(2));
        for (const auto &[e, g] : t)
            for (int m = 0; m <= mmax; ++m) {
                const int ef = e - m - k1;
                if (ef < lo) break;
                acc[ef] += g * ex[static_cast<std::size_t>(m)] * scalar;
            }
    }

    // Residue at infinity: minus the w^{-1} coefficient of the expansion in 1/w.
    {
        std::map<int, SymFunc> inner;  // theta exponent before the annihilation exponential
        const auto eparts = exp_power_sum_parts(inv_n, std::max(0, d - k - 1));
        std::vector<RationalFunctionQ> h;
        auto hj = [&](int j) {
            while (static_cast<int>(h.size()) <= j) {
                const int n = static_cast<int>(h.size());
                h.push_back(qp(2 * n) * (Q1() - qp(2 * (n + 1))) / (Q1() - qp(2)));
            }
            return h[static_cast<std::size_t>(j)];
        };
        for (const auto &[et, g] : translate_power_sums(f, [](int n) { return qp(4 * n); }))
            for (const auto &[ew, g2] : translate_power_sums(g, [](int n) { return -(Q1() + qp(2 * n)); })) {
                const int budget = ew - k - 1;  // M + j
                for (int j = 0; j <= budget; ++j) {
                    const int m = budget - j;
                    if (m >= static_cast<int>(eparts.size())) continue;
                    inner[et + j] -= g2 * eparts[static_cast<std::size_t>(m)] * hj(j);
                }
            }
        int top = 0;
        for (const auto &[e, g] : inner) top = std::max(top, e);
        const int nmax = std::max(0, top - lo);
        const auto ann = exp_power_sum_parts(phi_annihilation_coeff, nmax);
        for (const auto &[e, g] : inner) {
            if (g.is_zero()) continue;
            for (int n = 0; n <= nmax; ++n) {
                const int ef = e - n;
                if (ef < lo) break;
                acc[ef] += g * ann[static_cast<std::size_t>(n)];
            }
        }
    }

    Window w;
    w.lo[0] = 2 * lowest;
    DualFockSeries out({"theta"}, one_var_region("theta"), w);
    const RationalFunctionQ qu = bracket_unit();
    for (const auto &[e, g] : acc) {
        if (g.is_zero()) continue;
        out.add({2 * (e + shift), 0}, DualFockState(g * qu, k1, bra.sigma_twice() + k1 + i));
    }
    return out;
}

RowCombination two_row_vos_formal(int r, int s)
{
    if (r < 1 || s < 0) throw std::invalid_argument("two_row_vos_formal: need r >= 1, s >= 0");
    const PowerSeriesX cn = cn_series(s + 1);
    RowCombination x = apply_operator_series([&](int n) { return cn.coeff(n); }, RowOperator::Raising,
                                             RowCombination::single(r - 1, s));
    return x * RationalFunctionQ::monomial(-1, 4 * (r + s) - 1);
}

FockState two_row_vos_closed(int r, int s) { return FockState(two_row_vos_formal(r, s).expand(), 2); }

FockState two_row_vos_composed(int r, int s)
{
    FockSeries in = FockSeries::constant({"z", "w"}, zw_region(), FockState::vacuum());
    const Window win = Window::upper(r, s);
    FockSeries inner = apply_word(phi_minus_word(0, 1), in, win);
    FockSeries outer = apply_word(phi_minus_word(1, 0), inner, win);
    return coefficient_at(outer, {2 * r, 2 * s});
}

FockState two_row_vos_ope(int r, int s)
{
    FockSeries in = FockSeries::constant({"z", "w"}, zw_region(), FockState::vacuum());
    const RatioPrefactor p = ope_prefactor(OpeKind::PhiPhi, s, 0);
    Window nw;
    nw.hi[0] = 2 * (r + s) - p.monomial[0];
    nw.hi[1] = 2 * s;
    FockSeries no = apply_word(normal_ordered_word(OpeKind::PhiPhi, 1, 0), in, nw);
    const Window fw = Window::upper(r, s);
    return coefficient_at(multiply_ratio(no, p, "w", "z", fw), {2 * r, 2 * s});
}

namespace {

FockState two_row_vos_checked(int r, int s)
{
    FockState closed = two_row_vos_closed(r, s);
    if (two_row_vos_composed(r, s) != closed)
        throw std::logic_error("two_row_vos: composition differs from closed form at (" + std::to_string(r) + "," +
                               std::to_string(s) + ")");
    if (two_row_vos_ope(r, s) != closed)
        throw std::logic_error("two_row_vos: operator product route differs from closed form at (" +
                               std::to_string(r) + "," + std::to_string(s) + ")");
    return closed;
}

}  // namespace

FockState two_row_vos(int r, int s)
{
    if (r < 1 || s < 1) throw std::invalid_argument("two_row_vos: need r >= 1 and s >= 1");
    return two_row_vos_checked(r, s);
}

RationalFunctionQ dual_two_row_scalar() { return qp(-2); }

RowCombination dual_two_row_vos_formal(int r, int s)
{
    if (r < 0 || s < 1) throw std::invalid_argument("dual_two_row_vos_formal: need r >= 0, s >= 1");
    const PowerSeriesX cn = cn_series(r + 1);
    return apply_operator_series([&](int n) { return cn.coeff(n); }, RowOperator::Lowering,
                                 RowCombination::single(r, s - 1));
}

DualFockState dual_two_row_vos_closed(int r, int s)
{
    return DualFockState(dual_two_row_vos_formal(r, s).expand() * dual_two_row_scalar(), 2);
}

DualFockState dual_two_row_vos_engine(int r, int s)
{
    if (r < 0 || s < 0) throw std::invalid_argument("dual_two_row_vos_engine: need r, s >= 0");
    const DualFockState first = coefficient_at(phi_plus_on_dual_vacuum(r), {-2 * r, 0});
    return coefficient_at(phi_plus_on_dual(0, first, -s), {-2 * s, 0});
}

DualFockState dual_two_row_vos(int r, int s)
{
    DualFockState closed = dual_two_row_vos_closed(r, s);
    if (dual_two_row_vos_engine(r, s) != closed)
        throw std::logic_error("dual_two_row_vos: residue engine differs from closed form at (" + std::to_string(r) +
                               "," + std::to_string(s) + ")");
    return closed;
}

RationalFunctionQ matrix_element(int m, int n)
{
    if (m < 0 || n < 0) throw std::invalid_argument("matrix_element: need m, n >= 0");
    const DualFockState bra = coefficient_at(phi_plus_on_dual_vacuum(m), {-2 * m, 0});
    if (bra != dual_one_row_vos(m)) throw std::logic_error("matrix_element: dual one-row state mismatch");
    const FockState ket = one_row_vos_extracted(n);
    if (ket != one_row_vos(n)) throw std::logic_error("matrix_element: one-row state mismatch");
    RationalFunctionQ v = pairing(bra, ket);
    RationalFunctionQ expect = m == n ? qp(4 * n) * z_inverse_sum(n) : RationalFunctionQ();
    if (v != expect) throw std::logic_error("matrix_element: pairing differs from the partition sum");
    return v;
}

PowerSeriesX matrix_element_series(int order)
{
    if (order < 0) throw std::invalid_argument("matrix_element_series: order must be >= 0");
    const DualFockSeries duals = phi_plus_on_dual_vacuum(order);
    PowerSeriesX s(order);
    for (int n = 0; n <= order; ++n) {
        const DualFockState bra = coefficient_at(duals, {-2 * n, 0});
        s.set(n, pairing(bra, one_row_vos_extracted(n)));
    }
    const PowerSeriesX expect =
        poch_inf_series(qp(6), qp(4), order) / poch_inf_series(qp(4), qp(4), order);
    if (s != expect) throw std::logic_error("matrix_element_series: differs from the q-Pochhammer ratio");
    return s;
}

namespace {

RowCombination reconstruct(const RowCombination &vos, RowOperator op, int n, int m)
{
    const int steps = annihilation_bound(op, vos);
    const PowerSeriesX inv = inverse_cn_series(steps);
    RowCombination base = apply_operator_series([&](int j) { return inv.coeff(j); }, op, vos);
    const int d = n - m;
    return phi21_apply(qp(2), qp(4 * d), qp(2 + 4 * d), qp(4), qp(2), op, base);
}

}  // namespace

SymFunc qzonal_from_vos(int n, int m)
{
    if (n < 1 || m < 0 || n - 1 < m) throw std::invalid_argument("qzonal_from_vos: need n - 1 >= m >= 0");
    const FockState state = two_row_vos_checked(n, m);
    const RowCombination vos = two_row_vos_formal(n, m);
    if (vos.expand() != state.sym()) throw std::logic_error("qzonal_from_vos: formal combination mismatch");
    SymFunc z = reconstruct(vos, RowOperator::Raising, n, m).expand() *
                RationalFunctionQ::monomial(-1, -4 * (n + m) + 1);
    if (z != two_row_Z(n - 1, m)) throw std::logic_error("qzonal_from_vos: result differs from two_row_Z");
    return z;
}

SymFunc dual_qzonal_from_vos(int n, int m)
{
    if (n < 1 || m < 0 || n - 1 < m) throw std::invalid_argument("dual_qzonal_from_vos: need n - 1 >= m >= 0");
    const DualFockState state = dual_two_row_vos(m, n);
    const RowCombination vos = dual_two_row_vos_formal(m, n);
    if (vos.expand() * dual_two_row_scalar() != state.sym())
        throw std::logic_error("dual_qzonal_from_vos: formal combination mismatch");
    SymFunc z = reconstruct(vos, RowOperator::Lowering, n, m).expand();
    const SymFunc target = two_row_Z(n - 1, m);
    if (z != target) throw std::logic_error("dual_qzonal_from_vos: result differs from two_row_Z");
    for (const auto &mu : partitions_of(n - 1 + m)) {
        const SymFunc pm = SymFunc::power_sum(mu);
        if (adjoint_D(z, pm).coeff(Partition()) != inner_product_q(target, pm))
            throw std::logic_error("dual_qzonal_from_vos: adjoint pairing mismatch at " + mu.to_string());
    }
    return z;
}

std::vector<std::pair<std::string, FockState>> ope_probes()
{
    const FockState vac = FockState::vacuum();
    return {{"1", vac},
            {"e^{a/2}", apply_exp_alpha_half(1, vac)},
            {"b_{-1}", apply_b(-1, vac)},
            {"b_{-2}", apply_b(-2, vac)}};
}

namespace {

std::string key_string(const ExpKey &k)
{
    auto half = [](int x) { return x % 2 == 0 ? std::to_string(x / 2) : std::to_string(x) + "/2"; };
    return "z^" + half(k[0]) + " w^" + half(k[1]);
}

}  // namespace

OpeCheck verify_ope(OpeKind kind, int degree)
{
    if (degree < 0) throw std::invalid_argument("verify_ope: degree must be >= 0");
    OpeCheck rep;
    rep.kind = kind;
    const int D2 = 2 * degree;
    Window fin;
    fin.hi[0] = D2;
    fin.hi[1] = D2;
    fin.total_hi = D2;
    for (const auto &[name, probe] : ope_probes()) {
        const int k = probe.lattice_k();
        const int kpar = ((k % 2) + 2) % 2;
        int i = 0, j = 0;
        OperatorWord inner, outer;
        int wshift = 0;
        switch (kind) {
        case OpeKind::PhiPhi:
            j = kpar;
            i = 1 - kpar;
            inner = phi_minus_word(j, 1);
            outer = phi_minus_word(i, 0);
            wshift = k + j;
            break;
        case OpeKind::EPhi:
            j = kpar;
            inner = phi_minus_word(j, 1);
            outer = e_minus_word(0);
            wshift = k + j;
            break;
        case OpeKind::PhiE:
            i = kpar;
            inner = e_minus_word(1);
            outer = phi_minus_word(i, 0);
            wshift = -2 * k;
            break;
        case OpeKind::EE:
            inner = e_minus_word(1);
            outer = e_minus_word(0);
            wshift = -2 * k;
            break;
        }
        FockSeries in = FockSeries::constant({"z", "w"}, zw_region(), probe);
        FockSeries lhs = apply_word(outer, apply_word(inner, in, fin), fin).filtered(fin);

        const int w_min = wshift - 2 * content_degree(probe.sym());
        const int J = std::max(0, D2 - w_min);
        const RatioPrefactor p = ope_prefactor(kind, J / 2 + 1, 0);
        Window nw;
        nw.hi[0] = D2 + J - p.monomial[0];
        nw.hi[1] = D2;
        nw.total_hi = D2 - p.monomial[0];
        FockSeries no = apply_word(normal_ordered_word(kind, i, j), in, nw);
        FockSeries rhs = multiply_ratio(no, p, "w", "z", fin);

        auto diff = differing_keys(lhs, rhs);
        std::size_t n_keys = lhs.terms().size();
        for (const auto &[key, st] : rhs.terms())
            if (!lhs.terms().count(key)) ++n_keys;
        rep.compared += static_cast<int>(n_keys);
        if (!diff.empty() && rep.ok) {
            rep.ok = false;
            rep.first_discrepancy = "probe " + name + " at " + key_string(diff.front());
        }
    }
    return rep;
}

}  // namespace qvertex
