#include "qvertex/symfun.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace qvertex {

RationalFunctionQ inner_product_q(const SymFunc &f, const SymFunc &g)
{
    RationalFunctionQ acc;
    for (const auto &[la, c] : f.terms()) {
        auto it = g.terms().find(la);
        if (it != g.terms().end()) acc += c * it->second * z_q(la);
    }
    if (acc != inner_product_st(f, g, RationalFunctionQ::q_power(4), RationalFunctionQ::q_power(2)))
        throw std::logic_error("inner_product_q: disagreement with the (q^4, q^2) form");
    return acc;
}

SymFunc one_row_Z(int n)
{
    SymFunc z;
    if (n < 0) return z;
    for (const auto &la : partitions_of(n)) z.add_term(la, z_q(la).inverse());
    return z;
}

SymFunc heisenberg_derivative(int n, const SymFunc &f)
{
    if (n <= 0) throw std::invalid_argument("heisenberg_derivative: n must be positive");
    return f.derivative(n) * (RationalFunctionQ(n) * (RationalFunctionQ(1) + RationalFunctionQ::q_power(2 * n)));
}

SymFunc adjoint_D(const SymFunc &f, const SymFunc &g)
{
    SymFunc out;
    for (const auto &[la, c] : f.terms()) {
        SymFunc h = g;
        for (int part : la.parts()) {
            h = heisenberg_derivative(part, h);
            if (h.is_zero()) break;
        }
        out += h * c;
    }
    return out;
}

RationalFunctionQ z_inverse_sum(int n)
{
    RationalFunctionQ acc;
    for (const auto &la : partitions_of(n)) acc += z_q(la).inverse();
    return acc;
}

RowCombination RowCombination::single(int a, int b, const RationalFunctionQ &c)
{
    RowCombination x;
    x.add_term(a, b, c);
    return x;
}

void RowCombination::add_term(int a, int b, const RationalFunctionQ &c)
{
    if (a < 0 || b < 0 || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RowCombination &RowCombination::operator+=(const RowCombination &o)
{
    for (const auto &[k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

RowCombination &RowCombination::operator-=(const RowCombination &o)
{
    for (const auto &[k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

RowCombination &RowCombination::operator*=(const RationalFunctionQ &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, x] : terms_) x *= c;
    return *this;
}

RowCombination RowCombination::raised() const
{
    RowCombination out;
    for (const auto &[k, c] : terms_) out.add_term(k.first + 1, k.second - 1, c);
    return out;
}

RowCombination RowCombination::lowered() const
{
    RowCombination out;
    for (const auto &[k, c] : terms_) out.add_term(k.first - 1, k.second + 1, c);
    return out;
}

SymFunc RowCombination::expand() const
{
    SymFunc out;
    std::map<int, SymFunc> z;
    auto zn = [&](int n) -> const SymFunc & {
        auto it = z.find(n);
        if (it == z.end()) it = z.emplace(n, one_row_Z(n)).first;
        return it->second;
    };
    for (const auto &[k, c] : terms_) out += (zn(k.first) * zn(k.second)) * c;
    return out;
}

std::string RowCombination::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]*Z" << k.first << "Z" << k.second;
    }
    return os.str();
}

RowCombination raising_R(const RowCombination &x) { return x.raised(); }

RowCombination lowering_R(const RowCombination &x) { return x.lowered(); }

RowCombination apply_operator_series(const std::function<RationalFunctionQ(int)> &coeff, RowOperator op,
                                     const RowCombination &x, int max_steps)
{
    RowCombination out;
    RowCombination cur = x;
    for (int n = 0; !cur.is_zero(); ++n) {
        if (n > max_steps) throw std::logic_error("apply_operator_series: operator series did not terminate");
        RationalFunctionQ c = coeff(n);
        if (!c.is_zero()) out += cur * c;
        cur = op == RowOperator::Raising ? cur.raised() : cur.lowered();
    }
    return out;
}

int annihilation_bound(RowOperator op, const RowCombination &x)
{
    int bound = 0;
    for (const auto &[k, c] : x.terms())
        bound = std::max(bound, (op == RowOperator::Raising ? k.second : k.first) + 1);
    return bound;
}

RowCombination phi21_apply(const RationalFunctionQ &a, const RationalFunctionQ &b, const RationalFunctionQ &c,
                           const RationalFunctionQ &base, const RationalFunctionQ &z_coef, RowOperator op,
                           const RowCombination &target)
{
    const int steps = annihilation_bound(op, target);
    std::vector<RationalFunctionQ> coeffs;
    RationalFunctionQ term(1);
    RationalFunctionQ an = a, bn = b, cn = c, pn = base;
    for (int n = 0; n <= steps; ++n) {
        coeffs.push_back(term);
        // term_{n+1} = term_n (1 - a p^n)(1 - b p^n) / ((1 - c p^n)(1 - p^{n+1})) z
        RationalFunctionQ den = (RationalFunctionQ(1) - cn) * (RationalFunctionQ(1) - pn);
        if (den.is_zero()) {
            if (n < steps) throw std::domain_error("phi21_apply: vanishing denominator");
            break;
        }
        term = term * (RationalFunctionQ(1) - an) * (RationalFunctionQ(1) - bn) / den * z_coef;
        an *= base;
        bn *= base;
        cn *= base;
        pn *= base;
    }
    return apply_operator_series(
        [&](int n) { return n < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(n)] : RationalFunctionQ(); },
        op, target, steps + 1);
}

SymFunc phi21_operator_series(const RationalFunctionQ &a, const RationalFunctionQ &b, const RationalFunctionQ &c,
                              const RationalFunctionQ &base, const RationalFunctionQ &z_coef, RowOperator op,
                              const RowCombination &target)
{
    return phi21_apply(a, b, c, base, z_coef, op, target).expand();
}

RowCombination two_row_Z_formal(int r, int m)
{
    if (m < 0 || r < m) throw std::invalid_argument("two_row_Z: need r >= m >= 0");
    const int d = r + 1 - m;
    RowCombination base = RowCombination::single(r, m);
    RowCombination target = base - base.raised();
    return phi21_apply(RationalFunctionQ::q_power(2), RationalFunctionQ::q_power(4 * d),
                       RationalFunctionQ::q_power(2 + 4 * d), RationalFunctionQ::q_power(4),
                       RationalFunctionQ::q_power(2), RowOperator::Raising, target);
}

SymFunc two_row_Z(int r, int m) { return two_row_Z_formal(r, m).expand(); }

namespace {

mpq_class monomial_value(const Partition &la, const std::vector<mpq_class> &x)
{
    std::vector<int> e(x.size(), 0);
    for (std::size_t i = 0; i < la.parts().size(); ++i) e[i] = la.parts()[i];
    std::sort(e.begin(), e.end());
    mpq_class total = 0;
    do {
        mpq_class term = 1;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (e[i] == 0) continue;
            mpq_class pw;
            mpz_pow_ui(pw.get_num_mpz_t(), x[i].get_num_mpz_t(), static_cast<unsigned long>(e[i]));
            mpz_pow_ui(pw.get_den_mpz_t(), x[i].get_den_mpz_t(), static_cast<unsigned long>(e[i]));
            term *= pw;
        }
        total += term;
    } while (std::next_permutation(e.begin(), e.end()));
    return total;
}

mpq_class powersum_value(const Partition &mu, const std::vector<mpq_class> &x)
{
    mpq_class prod = 1;
    for (int part : mu.parts()) {
        mpq_class s = 0;
        for (const auto &xi : x) {
            mpq_class pw;
            mpz_pow_ui(pw.get_num_mpz_t(), xi.get_num_mpz_t(), static_cast<unsigned long>(part));
            mpz_pow_ui(pw.get_den_mpz_t(), xi.get_den_mpz_t(), static_cast<unsigned long>(part));
            s += pw;
        }
        prod *= s;
    }
    return prod;
}

// Solves A x = b in place; false if singular.
bool solve_exact(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b, std::vector<mpq_class> &x)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    x.resize(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return true;
}

SymFunc monomial_to_powersum_at(const Partition &la, int nvars)
{
    const int n = la.weight();
    const auto basis = partitions_of(n);
    std::mt19937 rng(20240611u + static_cast<unsigned>(nvars));
    std::uniform_int_distribution<int> dist(-6, 6);
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<std::vector<mpq_class>> a;
        std::vector<mpq_class> b;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            std::vector<mpq_class> x(static_cast<std::size_t>(nvars));
            for (auto &xi : x) xi = dist(rng);
            std::vector<mpq_class> row;
            for (const auto &mu : basis) row.push_back(powersum_value(mu, x));
            a.push_back(std::move(row));
            b.push_back(monomial_value(la, x));
        }
        std::vector<mpq_class> sol;
        if (!solve_exact(a, b, sol)) continue;
        SymFunc out;
        for (std::size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], RationalFunctionQ(sol[i]));
        return out;
    }
    throw std::runtime_error("monomial_to_powersum: no nonsingular sample set found");
}

}  // namespace

SymFunc monomial_to_powersum(const Partition &la, int nvars)
{
    if (nvars < la.weight()) throw std::invalid_argument("monomial_to_powersum: need nvars >= |la|");
    if (la.empty()) return SymFunc(RationalFunctionQ(1));
    SymFunc f = monomial_to_powersum_at(la, nvars);
    if (f != monomial_to_powersum_at(la, nvars + 1))
        throw std::logic_error("monomial_to_powersum: result depends on the number of variables");
    return f;
}

SymFunc jack_P(const Partition &la, const mpq_class &alpha)
{
    const RationalFunctionQ a(alpha);
    std::function<RationalFunctionQ(const Partition &)> weight = [&](const Partition &mu) {
        return a.pow(mu.length()) * RationalFunctionQ(z_classical(mu));
    };
    return gram_schmidt_basis<RationalFunctionQ>(la.weight(), weight).at(la);
}

SymFunc specialize_q1(const SymFunc &f)
{
    SymFunc out;
    for (const auto &[la, c] : f.terms()) {
        auto v = c.evaluate(mpq_class(1));
        if (!v) throw std::domain_error("specialize_q1: pole at q = 1 in the coefficient of p" + la.to_string());
        out.add_term(la, RationalFunctionQ(*v));
    }
    return out;
}

}  // namespace qvertex
