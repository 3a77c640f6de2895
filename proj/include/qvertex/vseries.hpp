#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qvertex/coeff.hpp"
#include "qvertex/fock.hpp"

namespace qvertex {

/// Exponent vector, doubled so half-integers stay exact. Unused slots are 0.
using ExpKey = std::array<int, 2>;

/// Exactness window on doubled exponents.
struct Window {
    std::array<std::optional<int>, 2> hi;
    std::array<std::optional<int>, 2> lo;
    std::optional<int> total_hi;
    std::optional<int> total_lo;

    bool admits(const ExpKey &k) const;
    /// Per-variable upper bound `hi` and total cap, both undoubled.
    static Window upper(int hi0, std::optional<int> hi1 = std::nullopt, std::optional<int> total = std::nullopt);
};

/// Variable labels ordered from largest to smallest modulus, plus the
/// contour annotation they came from.
struct ExpansionRegion {
    std::vector<std::string> order;
    std::string annotation;

    bool smaller(const std::string &a, const std::string &b) const;
    friend bool operator==(const ExpansionRegion &a, const ExpansionRegion &b)
    {
        return a.order == b.order && a.annotation == b.annotation;
    }
};

/// Truncated formal Laurent series in one or two variables with Fock-state
/// coefficients.
template <class State>
class Series {
public:
    Series() = default;
    Series(std::vector<std::string> vars, ExpansionRegion region, Window window = {})
        : vars_(std::move(vars)), region_(std::move(region)), window_(window)
    {
        if (vars_.empty() || vars_.size() > 2) throw std::invalid_argument("Series: one or two variables");
    }
    static Series constant(std::vector<std::string> vars, ExpansionRegion region, const State &s)
    {
        Series out(std::move(vars), std::move(region));
        out.add({0, 0}, s);
        return out;
    }

    const std::vector<std::string> &vars() const { return vars_; }
    const ExpansionRegion &region() const { return region_; }
    const Window &window() const { return window_; }
    void set_window(const Window &w) { window_ = w; }
    int var_index(const std::string &label) const
    {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == label) return static_cast<int>(i);
        throw std::invalid_argument("Series: unknown variable " + label);
    }

    const std::map<ExpKey, State> &terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const ExpKey &k, const State &s)
    {
        if (s.is_zero()) return;
        auto [it, inserted] = coeffs_.try_emplace(k, s);
        if (!inserted) {
            it->second += s;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    /// Stored coefficient; `outside` is set when k lies outside the window.
    State coefficient_raw(const ExpKey &k, bool *outside = nullptr) const
    {
        if (outside) *outside = !window_.admits(k);
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? State() : it->second;
    }

    Series filtered(const Window &w) const
    {
        Series out(vars_, region_, w);
        for (const auto &[k, s] : coeffs_)
            if (w.admits(k)) out.coeffs_.emplace(k, s);
        return out;
    }

    Series &operator+=(const Series &o)
    {
        check_compatible(o);
        for (const auto &[k, s] : o.coeffs_) add(k, s);
        return *this;
    }
    Series &operator-=(const Series &o)
    {
        check_compatible(o);
        for (const auto &[k, s] : o.coeffs_) add(k, s * RationalFunctionQ(-1));
        return *this;
    }
    Series &operator*=(const RationalFunctionQ &c)
    {
        if (c.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        for (auto &[k, s] : coeffs_) s *= c;
        return *this;
    }
    friend bool operator==(const Series &a, const Series &b) { return a.vars_ == b.vars_ && a.coeffs_ == b.coeffs_; }

    /// Keys where a and b differ, in key order.
    friend std::vector<ExpKey> differing_keys(const Series &a, const Series &b)
    {
        std::vector<ExpKey> out;
        auto ia = a.coeffs_.begin();
        auto ib = b.coeffs_.begin();
        while (ia != a.coeffs_.end() || ib != b.coeffs_.end()) {
            if (ib == b.coeffs_.end() || (ia != a.coeffs_.end() && ia->first < ib->first)) {
                out.push_back(ia->first);
                ++ia;
            } else if (ia == a.coeffs_.end() || ib->first < ia->first) {
                out.push_back(ib->first);
                ++ib;
            } else {
                if (ia->second != ib->second) out.push_back(ia->first);
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    std::string to_string() const
    {
        if (coeffs_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto &[k, st] : coeffs_) {
            if (!first) s += "\n + ";
            first = false;
            s += st.to_string();
            for (std::size_t i = 0; i < vars_.size(); ++i)
                s += " " + vars_[i] + "^" + (k[i] % 2 == 0 ? std::to_string(k[i] / 2) : std::to_string(k[i]) + "/2");
        }
        return s;
    }

private:
    void check_compatible(const Series &o) const
    {
        if (vars_ != o.vars_) throw std::invalid_argument("Series: variable mismatch");
        if (!(region_ == o.region_)) throw std::invalid_argument("Series: expansion region mismatch");
    }

    std::vector<std::string> vars_;
    ExpansionRegion region_;
    Window window_;
    std::map<ExpKey, State> coeffs_;
};

using FockSeries = Series<FockState>;
using DualFockSeries = Series<DualFockState>;

/// n -> coefficient of a mode sum.
using ModeCoeff = std::function<RationalFunctionQ(int)>;

/// Homogeneous parts E_0..E_max of exp(sum_n c(n) p_n x^n).
std::vector<SymFunc> exp_power_sum_parts(const ModeCoeff &c, int max_degree);

/// exp(sum_n a(n) x^{-n} b_n) on creation content, as undoubled exponent -> content.
std::map<int, SymFunc> annihilate_power_sums(const SymFunc &f, const ModeCoeff &a);
/// Translation p_n -> p_n + s(n) x^n, as undoubled exponent -> content.
std::map<int, SymFunc> translate_power_sums(const SymFunc &f, const ModeCoeff &s);

/// One factor of a bosonized operator word.
struct OpFactor {
    enum class Kind { Creation, Annihilation, Lattice, ZeroMode };
    Kind kind = Kind::Lattice;
    int var = 0;
    ModeCoeff coeff;
    int lattice = 0;
    // zero mode: doubled exponent shift a*d + b on var, sigma shift c*d + e
    int exp_a = 0, exp_b = 0, sig_a = 0, sig_b = 0;

    static OpFactor creation(int var, ModeCoeff c);
    static OpFactor annihilation(int var, ModeCoeff c);
    static OpFactor lattice_shift(int j);
    static OpFactor zero_mode(int var, int exp_a, int exp_b, int sig_a, int sig_b);
};

/// Product of factors written left to right. Kets see the rightmost factor
/// first; bras the leftmost. Each zero mode reads the lattice label at the
/// moment it acts.
struct OperatorWord {
    std::vector<OpFactor> factors;
};

/// Applies the word. Kets: creation terms are cut by the window's upper
/// bounds. Bras: annihilation terms are cut by its lower bounds, which must
/// be present for every variable the word annihilates in.
FockSeries apply_word(const OperatorWord &word, const FockSeries &in, const Window &window);
DualFockSeries apply_word(const OperatorWord &word, const DualFockSeries &in, const Window &window);

/// exp(sum_n c(n) b_{-n} var^n) on a ket.
FockSeries exp_creation_series(const ModeCoeff &c, const std::string &var, const FockState &state, int max_degree);
/// exp(sum_n c(n) b_n var^{-n}) on a ket.
FockSeries exp_annihilation_series(const ModeCoeff &c, const std::string &var, const FockState &state,
                                   std::optional<int> lowest = std::nullopt);

/// Prefactor shape: monomial (doubled exponents), sigma shift and a power
/// series in x = num/den.
struct RatioPrefactor {
    PowerSeriesX series;
    ExpKey monomial{0, 0};
    int sigma_twice = 0;
};

/// (sum_n p_n (num/den)^n) * monomial * series, kept inside `window`.
/// `den` must be the variable of larger modulus in the series' region.
template <class State>
Series<State> multiply_ratio(const Series<State> &s, const RatioPrefactor &p, const std::string &num,
                             const std::string &den, const Window &window)
{
    if (!s.region().smaller(num, den))
        throw std::invalid_argument("multiply_ratio: region does not put " + num + " inside " + den);
    const int in = s.var_index(num), id = s.var_index(den);
    Series<State> out(s.vars(), s.region(), window);
    for (const auto &[k, st] : s.terms()) {
        for (int n = 0; n <= p.series.order(); ++n) {
            const auto &c = p.series[n];
            if (c.is_zero()) continue;
            ExpKey key = k;
            key[static_cast<std::size_t>(in)] += 2 * n;
            key[static_cast<std::size_t>(id)] -= 2 * n;
            key[0] += p.monomial[0];
            key[1] += p.monomial[1];
            if (!window.admits(key)) continue;
            State t = st * c;
            t.shift_sigma(p.sigma_twice);
            out.add(key, t);
        }
    }
    return out;
}

/// Multiplies by a finite Laurent polynomial with scalar coefficients.
template <class State>
Series<State> multiply_scalar_series(const Series<State> &s, const std::map<ExpKey, RationalFunctionQ> &scalars,
                                     const Window &window)
{
    Series<State> out(s.vars(), s.region(), window);
    for (const auto &[k, st] : s.terms())
        for (const auto &[m, c] : scalars) {
            ExpKey key{k[0] + m[0], k[1] + m[1]};
            if (window.admits(key)) out.add(key, st * c);
        }
    return out;
}

/// Cauchy product of ket series: creation contents multiply, lattice labels
/// and sigma grades add.
FockSeries multiply(const FockSeries &a, const FockSeries &b, const Window &window);

/// The four operator product prefactors.
enum class OpeKind { PhiPhi, EPhi, PhiE, EE };
const char *ope_name(OpeKind kind);
/// Prefactor as a series in x = w/z through x^order; `z_index` selects which
/// slot of the monomial is z.
RatioPrefactor ope_prefactor(OpeKind kind, int order, int z_index = 0);

/// Coefficient at doubled exponents; throws std::domain_error when the
/// stored state carries a half-integral sigma grade. Out-of-window keys
/// return zero and set `outside`.
template <class State>
State coefficient_at(const Series<State> &s, const ExpKey &k, bool *outside = nullptr)
{
    State st = s.coefficient_raw(k, outside);
    if (st.sigma_twice() % 2 != 0) throw std::domain_error("coefficient_at: non-integral sigma grade");
    return st;
}

}  // namespace qvertex
