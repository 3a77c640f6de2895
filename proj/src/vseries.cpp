#include "qvertex/vseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qvertex {

bool Window::admits(const ExpKey &k) const
{
    for (std::size_t i = 0; i < 2; ++i) {
        if (hi[i] && k[i] > *hi[i]) return false;
        if (lo[i] && k[i] < *lo[i]) return false;
    }
    if (total_hi && k[0] + k[1] > *total_hi) return false;
    if (total_lo && k[0] + k[1] < *total_lo) return false;
    return true;
}

Window Window::upper(int hi0, std::optional<int> hi1, std::optional<int> total)
{
    Window w;
    w.hi[0] = 2 * hi0;
    if (hi1) w.hi[1] = 2 * *hi1;
    if (total) w.total_hi = 2 * *total;
    return w;
}

bool ExpansionRegion::smaller(const std::string &a, const std::string &b) const
{
    auto ia = std::find(order.begin(), order.end(), a);
    auto ib = std::find(order.begin(), order.end(), b);
    return ia != order.end() && ib != order.end() && ia > ib;
}

std::vector<SymFunc> exp_power_sum_parts(const ModeCoeff &c, int max_degree)
{
    // m E_m = sum_{n=1}^m n c(n) p_n E_{m-n}
    std::vector<SymFunc> e;
    e.emplace_back(RationalFunctionQ(1));
    std::vector<RationalFunctionQ> cn(static_cast<std::size_t>(max_degree + 1));
    for (int n = 1; n <= max_degree; ++n) cn[static_cast<std::size_t>(n)] = c(n);
    for (int m = 1; m <= max_degree; ++m) {
        SymFunc acc;
        for (int n = 1; n <= m; ++n) {
            const auto &c_n = cn[static_cast<std::size_t>(n)];
            if (c_n.is_zero()) continue;
            acc += e[static_cast<std::size_t>(m - n)].times_p(n) * (RationalFunctionQ(n) * c_n);
        }
        acc *= RationalFunctionQ(1) / RationalFunctionQ(m);
        e.push_back(std::move(acc));
    }
    return e;
}

OpFactor OpFactor::creation(int var, ModeCoeff c)
{
    OpFactor f;
    f.kind = Kind::Creation;
    f.var = var;
    f.coeff = std::move(c);
    return f;
}

OpFactor OpFactor::annihilation(int var, ModeCoeff c)
{
    OpFactor f;
    f.kind = Kind::Annihilation;
    f.var = var;
    f.coeff = std::move(c);
    return f;
}

OpFactor OpFactor::lattice_shift(int j)
{
    OpFactor f;
    f.kind = Kind::Lattice;
    f.lattice = j;
    return f;
}

OpFactor OpFactor::zero_mode(int var, int exp_a, int exp_b, int sig_a, int sig_b)
{
    OpFactor f;
    f.kind = Kind::ZeroMode;
    f.var = var;
    f.exp_a = exp_a;
    f.exp_b = exp_b;
    f.sig_a = sig_a;
    f.sig_b = sig_b;
    return f;
}

namespace {

template <class State>
int series_lattice(const Series<State> &s)
{
    return s.terms().empty() ? 0 : s.terms().begin()->second.lattice_k();
}

int half_room(int diff) { return diff < 0 ? -1 : diff / 2; }

// Largest m with key + 2m (on var) inside the upper bounds, or nullopt.
std::optional<int> creation_room(const ExpKey &k, int var, const Window &w)
{
    std::optional<int> room;
    auto take = [&](int r) { room = room ? std::min(*room, r) : r; };
    const auto v = static_cast<std::size_t>(var);
    if (w.hi[v]) take(half_room(*w.hi[v] - k[v]));
    if (w.total_hi) take(half_room(*w.total_hi - k[0] - k[1]));
    return room;
}

// Largest m with key - 2m (on var) above the lower bounds, after `pending`
// is added later on var and `pending_total` over all variables.
std::optional<int> annihilation_room(const ExpKey &k, int var, const Window &w, int pending, int pending_total)
{
    std::optional<int> room;
    auto take = [&](int r) { room = room ? std::min(*room, r) : r; };
    const auto v = static_cast<std::size_t>(var);
    if (w.lo[v]) take(half_room(k[v] + pending - *w.lo[v]));
    if (w.total_lo) take(half_room(k[0] + k[1] + pending_total - *w.total_lo));
    return room;
}

ExpKey shifted(ExpKey k, int var, int by)
{
    k[static_cast<std::size_t>(var)] += by;
    return k;
}

}  // namespace

std::map<int, SymFunc> annihilate_power_sums(const SymFunc &f, const ModeCoeff &a)
{
    std::map<int, SymFunc> cur{{0, f}};
    const int deg = f.max_degree();
    for (int n = 1; n <= deg; ++n) {
        const RationalFunctionQ an = a(n);
        if (an.is_zero()) continue;
        std::map<int, SymFunc> next;
        for (const auto &[e, g] : cur) {
            SymFunc h = g;
            RationalFunctionQ coef(1);
            for (int j = 0; !h.is_zero(); ++j) {
                next[e - n * j] += h * coef;
                h = heisenberg_derivative(n, h);
                coef = coef * an / RationalFunctionQ(j + 1);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::map<int, SymFunc> translate_power_sums(const SymFunc &f, const ModeCoeff &s)
{
    std::map<int, SymFunc> out;
    std::map<int, RationalFunctionQ> sn;
    for (const auto &[la, c] : f.terms()) {
        std::map<int, SymFunc> acc{{0, SymFunc(c)}};
        for (auto [n, m] : la.multiplicities()) {
            auto it = sn.find(n);
            if (it == sn.end()) it = sn.emplace(n, s(n)).first;
            const RationalFunctionQ &shift = it->second;
            std::map<int, SymFunc> next;
            mpz_class binom = 1;
            RationalFunctionQ pw(1);
            for (int j = 0; j <= m; ++j) {
                if (j > 0) {
                    binom = binom * (m - j + 1) / j;
                    pw *= shift;
                }
                if (pw.is_zero()) break;
                RationalFunctionQ factor = RationalFunctionQ(binom) * pw;
                for (const auto &[e, g] : acc) next[e + n * j] += g.times_p(n, m - j) * factor;
            }
            acc = std::move(next);
        }
        for (auto &[e, g] : acc) out[e] += g;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

namespace {

template <class State>
Series<State> apply_lattice(const Series<State> &in, int j)
{
    Series<State> out(in.vars(), in.region(), in.window());
    for (const auto &[k, s] : in.terms()) out.add(k, apply_exp_alpha_half(j, s));
    return out;
}

template <class State>
Series<State> apply_zero_mode(const Series<State> &in, const OpFactor &f)
{
    Series<State> out(in.vars(), in.region(), in.window());
    for (const auto &[k, s] : in.terms()) {
        const int d = momentum_eigenvalue(s);
        State t = s;
        t.shift_sigma(f.sig_a * d + f.sig_b);
        out.add(shifted(k, f.var, f.exp_a * d + f.exp_b), t);
    }
    return out;
}

}  // namespace

FockSeries apply_word(const OperatorWord &word, const FockSeries &in, const Window &window)
{
    FockSeries cur = in;
    cur.set_window(window);
    for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
        const OpFactor &f = *it;
        if (f.var < 0 || f.var >= static_cast<int>(cur.vars().size()))
            throw std::invalid_argument("apply_word: variable index out of range");
        switch (f.kind) {
        case OpFactor::Kind::Lattice:
            cur = apply_lattice(cur, f.lattice);
            break;
        case OpFactor::Kind::ZeroMode:
            cur = apply_zero_mode(cur, f);
            break;
        case OpFactor::Kind::Annihilation: {
            FockSeries out(cur.vars(), cur.region(), window);
            for (const auto &[k, s] : cur.terms())
                for (const auto &[e, g] : annihilate_power_sums(s.sym(), f.coeff)) out.add(shifted(k, f.var, 2 * e), s.with_sym(g));
            cur = std::move(out);
            break;
        }
        case OpFactor::Kind::Creation: {
            int need = 0;
            for (const auto &[k, s] : cur.terms()) {
                auto room = creation_room(k, f.var, window);
                if (!room) throw std::invalid_argument("apply_word: creation needs an upper bound");
                need = std::max(need, *room);
            }
            const auto parts = exp_power_sum_parts(f.coeff, need);
            FockSeries out(cur.vars(), cur.region(), window);
            for (const auto &[k, s] : cur.terms()) {
                const int room = *creation_room(k, f.var, window);
                for (int m = 0; m <= room; ++m) {
                    const auto &em = parts[static_cast<std::size_t>(m)];
                    if (em.is_zero()) continue;
                    out.add(shifted(k, f.var, 2 * m), s.with_sym(em * s.sym()));
                }
            }
            cur = std::move(out);
            break;
        }
        }
    }
    return cur;
}

DualFockSeries apply_word(const OperatorWord &word, const DualFockSeries &in, const Window &window)
{
    DualFockSeries cur = in;
    cur.set_window(window);
    const std::size_t nf = word.factors.size();
    for (std::size_t idx = 0; idx < nf; ++idx) {
        const OpFactor &f = word.factors[idx];
        if (f.var < 0 || f.var >= static_cast<int>(cur.vars().size()))
            throw std::invalid_argument("apply_word: variable index out of range");
        switch (f.kind) {
        case OpFactor::Kind::Lattice:
            cur = apply_lattice(cur, f.lattice);
            break;
        case OpFactor::Kind::ZeroMode:
            cur = apply_zero_mode(cur, f);
            break;
        case OpFactor::Kind::Creation: {
            const ModeCoeff c = f.coeff;
            ModeCoeff shift = [c](int n) {
                return c(n) * RationalFunctionQ(n) * (RationalFunctionQ(1) + RationalFunctionQ::q_power(2 * n));
            };
            DualFockSeries out(cur.vars(), cur.region(), window);
            for (const auto &[k, s] : cur.terms())
                for (const auto &[e, g] : translate_power_sums(s.sym(), shift)) out.add(shifted(k, f.var, 2 * e), s.with_sym(g));
            cur = std::move(out);
            break;
        }
        case OpFactor::Kind::Annihilation: {
            // exponent shift still to come on this variable
            int pending = 0, pending_total = 0;
            int lattice = series_lattice(cur);
            for (std::size_t j = idx + 1; j < nf; ++j) {
                const OpFactor &g = word.factors[j];
                if (g.kind == OpFactor::Kind::Lattice) lattice -= g.lattice;
                if (g.kind != OpFactor::Kind::ZeroMode) continue;
                const int sh = g.exp_a * lattice + g.exp_b;
                pending_total += sh;
                if (g.var == f.var) pending += sh;
            }
            int need = 0;
            for (const auto &[k, s] : cur.terms()) {
                auto room = annihilation_room(k, f.var, window, pending, pending_total);
                if (!room) throw std::invalid_argument("apply_word: bra annihilation needs a lower bound");
                need = std::max(need, *room);
            }
            const auto parts = exp_power_sum_parts(f.coeff, need);
            DualFockSeries out(cur.vars(), cur.region(), window);
            for (const auto &[k, s] : cur.terms()) {
                const int room = *annihilation_room(k, f.var, window, pending, pending_total);
                for (int m = 0; m <= room; ++m) {
                    const auto &em = parts[static_cast<std::size_t>(m)];
                    if (em.is_zero()) continue;
                    out.add(shifted(k, f.var, -2 * m), s.with_sym(em * s.sym()));
                }
            }
            cur = std::move(out);
            break;
        }
        }
    }
    return cur;
}

FockSeries exp_creation_series(const ModeCoeff &c, const std::string &var, const FockState &state, int max_degree)
{
    ExpansionRegion region{{var}, ""};
    OperatorWord word{{OpFactor::creation(0, c)}};
    return apply_word(word, FockSeries::constant({var}, region, state), Window::upper(max_degree));
}

FockSeries exp_annihilation_series(const ModeCoeff &c, const std::string &var, const FockState &state,
                                   std::optional<int> lowest)
{
    ExpansionRegion region{{var}, ""};
    OperatorWord word{{OpFactor::annihilation(0, c)}};
    Window w;
    if (lowest) w.lo[0] = 2 * *lowest;
    return apply_word(word, FockSeries::constant({var}, region, state), Window{}).filtered(w);
}

FockSeries multiply(const FockSeries &a, const FockSeries &b, const Window &window)
{
    if (a.vars() != b.vars()) throw std::invalid_argument("multiply: variable mismatch");
    if (!(a.region() == b.region())) throw std::invalid_argument("multiply: expansion region mismatch");
    FockSeries out(a.vars(), a.region(), window);
    for (const auto &[ka, sa] : a.terms())
        for (const auto &[kb, sb] : b.terms()) {
            ExpKey k{ka[0] + kb[0], ka[1] + kb[1]};
            if (!window.admits(k)) continue;
            out.add(k, FockState(sa.sym() * sb.sym(), sa.lattice_k() + sb.lattice_k(),
                                 sa.sigma_twice() + sb.sigma_twice()));
        }
    return out;
}

const char *ope_name(OpeKind kind)
{
    switch (kind) {
    case OpeKind::PhiPhi: return "phi-phi";
    case OpeKind::EPhi: return "E-phi";
    case OpeKind::PhiE: return "phi-E";
    case OpeKind::EE: return "E-E";
    }
    return "?";
}

RatioPrefactor ope_prefactor(OpeKind kind, int order, int z_index)
{
    RatioPrefactor p;
    const auto z = static_cast<std::size_t>(z_index);
    switch (kind) {
    case OpeKind::PhiPhi:
        p.series = poch_inf_series(RationalFunctionQ::q_power(2), RationalFunctionQ::q_power(4), order) /
                   poch_inf_series(RationalFunctionQ::q_power(4), RationalFunctionQ::q_power(4), order);
        p.monomial[z] = 1;
        p.sigma_twice = 1;
        break;
    case OpeKind::EPhi:
        p.series = PowerSeriesX::geometric(RationalFunctionQ::q_power(4), order);
        p.monomial[z] = -2;
        break;
    case OpeKind::PhiE:
        p.series = PowerSeriesX::geometric(RationalFunctionQ::q_power(-2), order);
        p.series *= RationalFunctionQ::monomial(-1, -3);
        p.monomial[z] = -2;
        break;
    case OpeKind::EE: {
        PowerSeriesX s(order);
        s.set(0, 1);
        if (order >= 1) s.set(1, -(RationalFunctionQ(1) + RationalFunctionQ::q_power(2)));
        if (order >= 2) s.set(2, RationalFunctionQ::q_power(2));
        p.series = s;
        p.monomial[z] = 4;
        break;
    }
    }
    return p;
}

}  // namespace qvertex
