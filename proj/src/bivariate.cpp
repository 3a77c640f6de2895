#include "qvertex/bivariate.hpp"

#include <sstream>
#include <stdexcept>

namespace qvertex {

PolyST::PolyST(RationalFunctionQ c)
{
    if (!c.is_zero()) c_.push_back(std::move(c));
}

PolyST PolyST::s_power(int k)
{
    PolyST p;
    p.c_.assign(static_cast<std::size_t>(k + 1), RationalFunctionQ());
    p.c_.back() = 1;
    return p;
}

RationalFunctionQ PolyST::coeff(int k) const
{
    if (k < 0 || k > degree()) return {};
    return c_[static_cast<std::size_t>(k)];
}

void PolyST::trim()
{
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyST &PolyST::operator+=(const PolyST &o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyST &PolyST::operator-=(const PolyST &o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyST operator*(const PolyST &a, const PolyST &b)
{
    PolyST p;
    if (a.is_zero() || b.is_zero()) return p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, RationalFunctionQ());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.trim();
    return p;
}

PolyST PolyST::scaled(const RationalFunctionQ &c) const
{
    if (c.is_zero()) return {};
    PolyST p = *this;
    for (auto &x : p.c_) x *= c;
    return p;
}

std::pair<PolyST, PolyST> PolyST::divmod(const PolyST &a, const PolyST &b)
{
    if (b.is_zero()) throw std::domain_error("PolyST::divmod: division by zero");
    PolyST quot;
    PolyST rem = a;
    if (a.degree() < b.degree()) return {quot, rem};
    quot.c_.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), RationalFunctionQ());
    const RationalFunctionQ inv_lead = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        RationalFunctionQ f = rem.leading() * inv_lead;
        for (int j = 0; j <= b.degree(); ++j)
            rem.c_[static_cast<std::size_t>(shift + j)] -= f * b.c_[static_cast<std::size_t>(j)];
        rem.c_.back() = RationalFunctionQ();  // exact cancellation of the lead
        rem.trim();
        quot.c_[static_cast<std::size_t>(shift)] = std::move(f);
    }
    quot.trim();
    return {quot, rem};
}

PolyST PolyST::monic() const
{
    if (is_zero()) return *this;
    return scaled(leading().inverse());
}

PolyST PolyST::gcd(PolyST a, PolyST b)
{
    while (!b.is_zero()) {
        PolyST r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string PolyST::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= degree(); ++k) {
        const auto &c = c_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        for (auto &ch : cs)
            if (ch == 'q') ch = 't';
        if (k == 0) {
            os << cs;
        } else {
            if (!c.is_one()) os << "(" << cs << ")*";
            os << "s";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

RationalST::RationalST(PolyST num, PolyST den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) throw std::domain_error("RationalST: zero denominator");
    normalize();
}

RationalST RationalST::s() { return RationalST(PolyST::s_power(1), PolyST(RationalFunctionQ(1))); }

RationalST RationalST::t() { return from_t(RationalFunctionQ::q_power(1)); }

RationalST RationalST::from_t(const RationalFunctionQ &c) { return RationalST(PolyST(c), PolyST(RationalFunctionQ(1))); }

void RationalST::normalize()
{
    if (num_.is_zero()) {
        den_ = PolyST(RationalFunctionQ(1));
        return;
    }
    if (den_.degree() > 0) {
        PolyST g = PolyST::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = PolyST::divmod(num_, g).first;
            den_ = PolyST::divmod(den_, g).first;
        }
    }
    const RationalFunctionQ lead = den_.leading();
    if (!lead.is_one()) {
        const RationalFunctionQ inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalST RationalST::operator-() const
{
    RationalST r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalST &RationalST::operator+=(const RationalST &o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalST &RationalST::operator-=(const RationalST &o) { return *this += -o; }

RationalST &RationalST::operator*=(const RationalST &o)
{
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalST RationalST::inverse() const
{
    if (is_zero()) throw std::domain_error("RationalST: inverse of zero");
    return RationalST(den_, num_);
}

RationalST &RationalST::operator/=(const RationalST &o) { return *this *= o.inverse(); }

RationalST RationalST::pow(int e) const
{
    if (e < 0) return inverse().pow(-e);
    RationalST out(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

RationalFunctionQ RationalST::specialize(int s_power, int t_power) const
{
    auto eval = [&](const PolyST &p) {
        RationalFunctionQ acc;
        const RationalFunctionQ s = RationalFunctionQ::q_power(s_power);
        for (int k = p.degree(); k >= 0; --k) acc = acc * s + p.coeff(k).substitute_power(t_power);
        return acc;
    };
    RationalFunctionQ d = eval(den_);
    if (d.is_zero()) throw std::domain_error("RationalST::specialize: denominator vanishes");
    return eval(num_) / d;
}

std::string RationalST::to_string() const
{
    if (den_.degree() == 0 && den_.leading().is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace qvertex
