#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qvertex/coeff.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/rational.hpp"

namespace qvertex {

/// Finite linear combination of power sums p_lambda with coefficients in F.
template <class F>
class SymFuncT {
public:
    using Terms = std::map<Partition, F, PartitionOrder>;

    SymFuncT() = default;
    explicit SymFuncT(const F &c)
    {
        if (!c.is_zero()) terms_.emplace(Partition(), c);
    }
    static SymFuncT power_sum(const Partition &la, const F &c = F(1))
    {
        SymFuncT f;
        f.add_term(la, c);
        return f;
    }

    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    F coeff(const Partition &la) const
    {
        auto it = terms_.find(la);
        return it == terms_.end() ? F() : it->second;
    }
    std::set<int> degrees() const
    {
        std::set<int> d;
        for (const auto &[la, c] : terms_) d.insert(la.weight());
        return d;
    }
    /// -1 for the zero function.
    int max_degree() const
    {
        int d = -1;
        for (const auto &[la, c] : terms_) d = std::max(d, la.weight());
        return d;
    }

    void add_term(const Partition &la, const F &c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(la, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SymFuncT &operator+=(const SymFuncT &o)
    {
        for (const auto &[la, c] : o.terms_) add_term(la, c);
        return *this;
    }
    SymFuncT &operator-=(const SymFuncT &o)
    {
        for (const auto &[la, c] : o.terms_) add_term(la, -c);
        return *this;
    }
    SymFuncT &operator*=(const F &c)
    {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &[la, x] : terms_) x *= c;
        return *this;
    }
    friend SymFuncT operator+(SymFuncT a, const SymFuncT &b) { return a += b; }
    friend SymFuncT operator-(SymFuncT a, const SymFuncT &b) { return a -= b; }
    friend SymFuncT operator*(SymFuncT a, const F &c) { return a *= c; }
    friend SymFuncT operator*(const F &c, SymFuncT a) { return a *= c; }
    SymFuncT operator-() const { return *this * F(-1); }
    friend SymFuncT operator*(const SymFuncT &a, const SymFuncT &b)
    {
        SymFuncT out;
        for (const auto &[la, x] : a.terms_)
            for (const auto &[mu, y] : b.terms_) out.add_term(la.joined(mu), x * y);
        return out;
    }
    friend bool operator==(const SymFuncT &a, const SymFuncT &b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SymFuncT &a, const SymFuncT &b) { return !(a == b); }

    SymFuncT homogeneous_part(int n) const
    {
        SymFuncT out;
        for (const auto &[la, c] : terms_)
            if (la.weight() == n) out.terms_.emplace(la, c);
        return out;
    }

    /// Plain partial derivative with respect to p_n.
    SymFuncT derivative(int n) const
    {
        SymFuncT out;
        for (const auto &[la, c] : terms_) {
            const int m = la.multiplicity(n);
            if (m == 0) continue;
            out.add_term(la.without_part(n), c * F(static_cast<long>(m)));
        }
        return out;
    }

    /// Multiplication by p_n^j.
    SymFuncT times_p(int n, int j = 1) const
    {
        if (j == 0) return *this;
        Partition extra(std::vector<int>(static_cast<std::size_t>(j), n));
        SymFuncT out;
        for (const auto &[la, c] : terms_) out.terms_.emplace(la.joined(extra), c);
        return out;
    }

    template <class G, class Fn>
    SymFuncT<G> map_coeffs(Fn fn) const
    {
        SymFuncT<G> out;
        for (const auto &[la, c] : terms_) out.add_term(la, fn(c));
        return out;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto &[la, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "[" + c.to_string() + "]";
            if (!la.empty()) s += "*p" + la.to_string();
        }
        return s;
    }

private:
    Terms terms_;
};

using SymFunc = SymFuncT<RationalFunctionQ>;

/// Element of F representing a rational number.
template <class F>
F from_rational(const mpq_class &x)
{
    return F(mpz_class(x.get_num())) / F(mpz_class(x.get_den()));
}

/// <f, g>_{s,t} with <p_la, p_mu> = delta z_la(s,t).
template <class F>
F inner_product_st(const SymFuncT<F> &f, const SymFuncT<F> &g, const F &s, const F &t)
{
    F acc;
    for (const auto &[la, c] : f.terms()) {
        auto it = g.terms().find(la);
        if (it != g.terms().end()) acc += c * it->second * z_st(la, s, t);
    }
    return acc;
}

/// <f, g>_q with <p_la, p_mu> = delta z_la(q); checked against the (q^4, q^2) form.
RationalFunctionQ inner_product_q(const SymFunc &f, const SymFunc &g);

/// Z_n = sum_{|la|=n} p_la / z_la(q); Z_0 = 1 and Z_n = 0 for n < 0.
SymFunc one_row_Z(int n);

/// n(1+q^{2n}) d/dp_n, the b_n action on creation content.
SymFunc heisenberg_derivative(int n, const SymFunc &f);

/// D(f) applied to g: every p_n in f becomes n(1+q^{2n}) d/dp_n.
SymFunc adjoint_D(const SymFunc &f, const SymFunc &g);

/// sum_{|la|=n} 1/z_la(q).
RationalFunctionQ z_inverse_sum(int n);

/// Formal combination of products Z_a Z_b of one-row functions.
class RowCombination {
public:
    using Key = std::pair<int, int>;

    RowCombination() = default;
    static RowCombination single(int a, int b, const RationalFunctionQ &c = RationalFunctionQ(1));

    const std::map<Key, RationalFunctionQ> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(int a, int b, const RationalFunctionQ &c);

    RowCombination &operator+=(const RowCombination &o);
    RowCombination &operator-=(const RowCombination &o);
    RowCombination &operator*=(const RationalFunctionQ &c);
    friend RowCombination operator+(RowCombination a, const RowCombination &b) { return a += b; }
    friend RowCombination operator-(RowCombination a, const RowCombination &b) { return a -= b; }
    friend RowCombination operator*(RowCombination a, const RationalFunctionQ &c) { return a *= c; }
    friend bool operator==(const RowCombination &a, const RowCombination &b) { return a.terms_ == b.terms_; }

    /// Z_a Z_b -> Z_{a+1} Z_{b-1}.
    RowCombination raised() const;
    /// Z_a Z_b -> Z_{a-1} Z_{b+1}.
    RowCombination lowered() const;

    /// Sum of Z_a Z_b as a symmetric function.
    SymFunc expand() const;

    std::string to_string() const;

private:
    std::map<Key, RationalFunctionQ> terms_;
};

enum class RowOperator { Raising, Lowering };

RowCombination raising_R(const RowCombination &x);
RowCombination lowering_R(const RowCombination &x);

/// sum_n coeff(n) op^n x; stops once op^n x vanishes. Throws std::logic_error
/// if that does not happen within max_steps.
RowCombination apply_operator_series(const std::function<RationalFunctionQ(int)> &coeff, RowOperator op,
                                     const RowCombination &x, int max_steps = 1000);

/// Number of op applications after which every term of x is annihilated.
int annihilation_bound(RowOperator op, const RowCombination &x);

/// 2phi1(a, b; c; base, z_coef * op) applied to target.
RowCombination phi21_apply(const RationalFunctionQ &a, const RationalFunctionQ &b, const RationalFunctionQ &c,
                           const RationalFunctionQ &base, const RationalFunctionQ &z_coef, RowOperator op,
                           const RowCombination &target);
SymFunc phi21_operator_series(const RationalFunctionQ &a, const RationalFunctionQ &b, const RationalFunctionQ &c,
                              const RationalFunctionQ &base, const RationalFunctionQ &z_coef, RowOperator op,
                              const RowCombination &target);

/// The formal JJ combination for the shape (r, m), before expansion.
RowCombination two_row_Z_formal(int r, int m);
/// Two-row q-zonal function for the shape (r, m), r >= m >= 0.
SymFunc two_row_Z(int r, int m);

/// Power-sum expansion of the monomial symmetric function m_la, found by
/// exact evaluation at integer sample points; checked against nvars + 1.
SymFunc monomial_to_powersum(const Partition &la, int nvars);

/// Gram-Schmidt of the monomial basis of degree n along a linear extension
/// of dominance, under the diagonal power-sum form with the given weight.
template <class F>
std::map<Partition, SymFuncT<F>, PartitionOrder> gram_schmidt_basis(int n,
                                                                   const std::function<F(const Partition &)> &weight);

/// Macdonald P_la(s, t) in the power-sum basis.
template <class F>
SymFuncT<F> macdonald_P(const Partition &la, const F &s, const F &t);

/// Jack P_la at parameter alpha, weight alpha^{l(mu)} z_mu.
SymFunc jack_P(const Partition &la, const mpq_class &alpha);

/// Substitutes q = 1 in every coefficient; throws std::domain_error on a pole.
SymFunc specialize_q1(const SymFunc &f);

/// c with f = c g, when it exists.
template <class F>
std::optional<F> collinear_ratio(const SymFuncT<F> &f, const SymFuncT<F> &g)
{
    if (g.is_zero()) return f.is_zero() ? std::optional<F>(F(1)) : std::nullopt;
    const auto &[la0, g0] = *g.terms().begin();
    F c = f.coeff(la0) / g0;
    if (g * c != f) return std::nullopt;
    return c;
}

// --- implementation -------------------------------------------------------

template <class F>
std::map<Partition, SymFuncT<F>, PartitionOrder> gram_schmidt_basis(int n,
                                                                   const std::function<F(const Partition &)> &weight)
{
    std::vector<Partition> order = partitions_of(n);
    std::reverse(order.begin(), order.end());  // (1^n) first: lexicographic ascending
    std::map<Partition, F, PartitionOrder> w;
    for (const auto &mu : order) w.emplace(mu, weight(mu));
    auto form = [&](const SymFuncT<F> &f, const SymFuncT<F> &g) {
        F acc;
        for (const auto &[la, c] : f.terms()) {
            auto it = g.terms().find(la);
            if (it != g.terms().end()) acc += c * it->second * w.at(la);
        }
        return acc;
    };
    std::map<Partition, SymFuncT<F>, PartitionOrder> out;
    std::vector<std::pair<SymFuncT<F>, F>> done;  // P_mu and <P_mu, P_mu>
    for (const auto &la : order) {
        SymFuncT<F> v = monomial_to_powersum(la, n).template map_coeffs<F>([](const RationalFunctionQ &c) {
            return from_rational<F>(*c.constant_value());
        });
        SymFuncT<F> p = v;
        for (const auto &[pm, norm] : done) p -= pm * (form(v, pm) / norm);
        F norm = form(p, p);
        if (norm.is_zero()) throw std::domain_error("gram_schmidt_basis: degenerate form at " + la.to_string());
        done.emplace_back(p, norm);
        out.emplace(la, std::move(p));
    }
    return out;
}

template <class F>
SymFuncT<F> macdonald_P(const Partition &la, const F &s, const F &t)
{
    std::function<F(const Partition &)> weight = [&](const Partition &mu) { return z_st(mu, s, t); };
    return gram_schmidt_basis<F>(la.weight(), weight).at(la);
}

}  // namespace qvertex
