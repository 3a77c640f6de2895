#include "qvertex/coeff.hpp"

#include <sstream>
#include <stdexcept>

#include "qvertex/partition.hpp"

namespace qvertex {

PowerSeriesX::PowerSeriesX(int order) : order_(order)
{
    if (order < 0) throw std::invalid_argument("PowerSeriesX: negative truncation order");
    coeffs_.assign(static_cast<std::size_t>(order + 1), RationalFunctionQ());
}

PowerSeriesX::PowerSeriesX(int order, std::vector<RationalFunctionQ> coeffs) : PowerSeriesX(order)
{
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

PowerSeriesX PowerSeriesX::one(int order)
{
    PowerSeriesX s(order);
    s.coeffs_[0] = 1;
    return s;
}

PowerSeriesX PowerSeriesX::geometric(const RationalFunctionQ &c, int order)
{
    PowerSeriesX s(order);
    RationalFunctionQ term(1);
    for (int k = 0; k <= order; ++k) {
        s.coeffs_[static_cast<std::size_t>(k)] = term;
        term *= c;
    }
    return s;
}

RationalFunctionQ PowerSeriesX::coeff(int n) const
{
    if (n < 0 || n > order_) return {};
    return coeffs_[static_cast<std::size_t>(n)];
}

void PowerSeriesX::set(int n, RationalFunctionQ c)
{
    if (n < 0 || n > order_) throw std::out_of_range("PowerSeriesX::set: exponent outside truncation");
    coeffs_[static_cast<std::size_t>(n)] = std::move(c);
}

PowerSeriesX PowerSeriesX::truncated(int order) const
{
    PowerSeriesX s(order);
    for (int k = 0; k <= std::min(order, order_); ++k) s.coeffs_[static_cast<std::size_t>(k)] = coeff(k);
    return s;
}

PowerSeriesX PowerSeriesX::rescaled(const RationalFunctionQ &c) const
{
    PowerSeriesX s = *this;
    RationalFunctionQ f(1);
    for (auto &x : s.coeffs_) {
        x *= f;
        f *= c;
    }
    return s;
}

PowerSeriesX PowerSeriesX::inverse() const
{
    if (coeffs_[0].is_zero()) throw std::domain_error("PowerSeriesX::inverse: zero constant term");
    PowerSeriesX g(order_);
    const RationalFunctionQ inv0 = coeffs_[0].inverse();
    g.coeffs_[0] = inv0;
    for (int n = 1; n <= order_; ++n) {
        RationalFunctionQ acc;
        for (int k = 1; k <= n; ++k) acc += coeffs_[static_cast<std::size_t>(k)] * g.coeffs_[static_cast<std::size_t>(n - k)];
        g.coeffs_[static_cast<std::size_t>(n)] = -(acc * inv0);
    }
    return g;
}

PowerSeriesX PowerSeriesX::exp() const
{
    if (!coeffs_[0].is_zero()) throw std::domain_error("PowerSeriesX::exp: nonzero constant term");
    PowerSeriesX g(order_);
    g.coeffs_[0] = 1;
    for (int n = 1; n <= order_; ++n) {
        RationalFunctionQ acc;
        for (int k = 1; k <= n; ++k)
            acc += RationalFunctionQ(k) * coeffs_[static_cast<std::size_t>(k)] * g.coeffs_[static_cast<std::size_t>(n - k)];
        g.coeffs_[static_cast<std::size_t>(n)] = acc / RationalFunctionQ(n);
    }
    return g;
}

PowerSeriesX &PowerSeriesX::operator+=(const PowerSeriesX &o)
{
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] += o.coeffs_[static_cast<std::size_t>(k)];
    return *this;
}

PowerSeriesX &PowerSeriesX::operator-=(const PowerSeriesX &o)
{
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] -= o.coeffs_[static_cast<std::size_t>(k)];
    return *this;
}

PowerSeriesX &PowerSeriesX::operator*=(const RationalFunctionQ &c)
{
    for (auto &x : coeffs_) x *= c;
    return *this;
}

PowerSeriesX operator*(const PowerSeriesX &a, const PowerSeriesX &b)
{
    const int order = std::min(a.order_, b.order_);
    PowerSeriesX s(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j)
            s.coeffs_[static_cast<std::size_t>(i + j)] +=
                a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return s;
}

bool operator==(const PowerSeriesX &a, const PowerSeriesX &b)
{
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string PowerSeriesX::to_string(const char *var) const
{
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= order_; ++k) {
        const auto &c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "[" << c.to_string() << "]";
        if (k > 0) os << "*" << var << "^" << k;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << order_ + 1 << ")";
    return os.str();
}

RationalFunctionQ poch_finite(const RationalFunctionQ &a, const RationalFunctionQ &p, int n)
{
    if (n < 0) throw std::invalid_argument("poch_finite: negative length");
    RationalFunctionQ out(1);
    RationalFunctionQ apk = a;
    for (int k = 0; k < n; ++k) {
        out *= RationalFunctionQ(1) - apk;
        apk *= p;
    }
    return out;
}

namespace {

// Euler: (a x; p)_inf = sum_k (-1)^k p^{k(k-1)/2} a^k x^k / (p; p)_k
PowerSeriesX euler_expansion(const RationalFunctionQ &a, const RationalFunctionQ &p, int order)
{
    PowerSeriesX s(order);
    RationalFunctionQ term(1);
    RationalFunctionQ pk(1);  // p^k
    for (int k = 0; k <= order; ++k) {
        s.set(k, term);
        // term_{k+1} = term_k * (-a p^k) / (1 - p^{k+1})
        RationalFunctionQ pk1 = pk * p;
        term = term * (-a) * pk / (RationalFunctionQ(1) - pk1);
        pk = std::move(pk1);
    }
    return s;
}

}  // namespace

PowerSeriesX poch_inf_series(const RationalFunctionQ &a, const RationalFunctionQ &p, int order)
{
    if (order < 0) throw std::invalid_argument("poch_inf_series: negative order");
    PowerSeriesX euler = euler_expansion(a, p, order);
    if (a.is_zero() || order == 0) return euler;

    // (a x; p)_inf = prod_{k<N} (1 - a p^k x) * (a p^N x; p)_inf
    PowerSeriesX head = PowerSeriesX::one(order);
    RationalFunctionQ apk = a;
    for (int k = 0; k < order; ++k) {
        PowerSeriesX factor = PowerSeriesX::one(order);
        factor.set(1, -apk);
        head = head * factor;
        apk *= p;
    }
    PowerSeriesX tail = euler_expansion(apk, p, order);
    if (head * tail != euler)
        throw std::logic_error("poch_inf_series: Euler expansion disagrees with factor product");
    return euler;
}

PowerSeriesX cn_by_pochhammer_ratio(int order)
{
    const auto q2 = RationalFunctionQ::q_power(2);
    const auto q4 = RationalFunctionQ::q_power(4);
    return poch_inf_series(q2, q4, order) / poch_inf_series(q4, q4, order);
}

PowerSeriesX cn_by_exponential(int order)
{
    PowerSeriesX log(order);
    for (int k = 1; k <= order; ++k) {
        auto q2k = RationalFunctionQ::q_power(2 * k);
        log.set(k, -q2k / (RationalFunctionQ(k) * (RationalFunctionQ(1) + q2k)));
    }
    return log.exp();
}

PowerSeriesX cn_by_partition_sum(int order)
{
    PowerSeriesX s(order);
    for (int n = 0; n <= order; ++n) {
        RationalFunctionQ acc;
        for (const auto &la : partitions_of(n)) {
            RationalFunctionQ term = RationalFunctionQ::q_power(2 * n) / z_q(la);
            acc += (la.length() % 2 == 0) ? term : -term;
        }
        s.set(n, acc);
    }
    return s;
}

PowerSeriesX cn_series(int order)
{
    if (order < 0) throw std::invalid_argument("cn_series: negative order");
    PowerSeriesX ratio = cn_by_pochhammer_ratio(order);
    PowerSeriesX expo = cn_by_exponential(order);
    PowerSeriesX parts = cn_by_partition_sum(order);
    if (ratio != expo || ratio != parts) {
        int n = 0;
        while (n <= order && ratio[n] == expo[n] && ratio[n] == parts[n]) ++n;
        throw std::logic_error("cn_series: routes disagree at x^" + std::to_string(n) + ": ratio=" +
                               ratio[n].to_string() + " exp=" + expo[n].to_string() +
                               " partitions=" + parts[n].to_string());
    }
    return ratio;
}

PowerSeriesX inverse_cn_series(int order)
{
    const auto q2 = RationalFunctionQ::q_power(2);
    const auto q4 = RationalFunctionQ::q_power(4);
    return poch_inf_series(RationalFunctionQ(1), q4, order) / poch_inf_series(q2, q4, order);
}

}  // namespace qvertex
