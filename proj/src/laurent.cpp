#include "qvertex/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qvertex {

LaurentPoly::LaurentPoly(long c)
{
    if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(mpz_class c)
{
    if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(mpz_class c, int exponent)
{
    LaurentPoly p(std::move(c));
    if (!p.is_zero()) p.low_ = exponent;
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, mpz_class> &terms)
{
    LaurentPoly p;
    if (terms.empty()) return p;
    const int lo = terms.begin()->first;
    const int hi = terms.rbegin()->first;
    p.low_ = lo;
    p.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
    for (const auto &[e, c] : terms) p.coeffs_[static_cast<std::size_t>(e - lo)] += c;
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<mpz_class> coeffs)
{
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void LaurentPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
}

std::size_t LaurentPoly::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class &c) { return c != 0; }));
}

mpz_class LaurentPoly::coeff(int exponent) const
{
    if (is_zero() || exponent < low_ || exponent > high()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, mpz_class>> LaurentPoly::terms() const
{
    std::vector<std::pair<int, mpz_class>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
}

mpz_class LaurentPoly::content() const
{
    mpz_class g = 0;
    for (const auto &c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::shifted(int by) const
{
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += by;
    return p;
}

LaurentPoly LaurentPoly::substitute_power(int k) const
{
    if (k == 0) throw std::invalid_argument("substitute_power: exponent multiplier must be nonzero");
    if (k == 1 || is_zero()) return *this;
    std::map<int, mpz_class> t;
    for (auto &[e, c] : terms()) t[e * k] = c;
    return from_terms(t);
}

mpq_class LaurentPoly::evaluate(const mpq_class &q) const
{
    if (is_zero()) return 0;
    if (q == 0) {
        if (low_ < 0) throw std::domain_error("evaluate: negative power of q at q = 0");
        return low_ == 0 ? mpq_class(coeffs_.front()) : mpq_class(0);
    }
    // Horner from the top, then scale by q^low.
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + mpq_class(*it);
    mpq_class scale = 1;
    const mpq_class base = low_ >= 0 ? q : mpq_class(1) / q;
    for (int i = 0; i < std::abs(low_); ++i) scale *= base;
    acc *= scale;
    acc.canonicalize();
    return acc;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly p = *this;
    for (auto &c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    if (lo < low_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
        low_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), mpz_class(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[static_cast<std::size_t>(o.low_ - lo) + i] += o.coeffs_[i];
    trim();
    return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
{
    LaurentPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(p.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    p.trim();
    return p;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &o) { return *this = *this * o; }

LaurentPoly &LaurentPoly::operator*=(const mpz_class &c)
{
    if (c == 0) {
        coeffs_.clear();
        low_ = 0;
        return *this;
    }
    for (auto &x : coeffs_) x *= c;
    return *this;
}

LaurentPoly &LaurentPoly::divexact(const mpz_class &c)
{
    for (auto &x : coeffs_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return *this;
}

std::string LaurentPoly::to_string(const char *var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto &[e, c] : terms()) {
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << var;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

namespace detail {

namespace {

using Dense = std::vector<mpz_class>;

int degree(const Dense &p) { return static_cast<int>(p.size()) - 1; }

void trim_top(Dense &p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void strip_low_zeros(Dense &p)
{
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
}

mpz_class dense_content(const Dense &p)
{
    mpz_class g = 0;
    for (const auto &c : p) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void make_primitive(Dense &p)
{
    mpz_class g = dense_content(p);
    if (g > 1)
        for (auto &c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (!p.empty() && p.back() < 0)
        for (auto &c : p) c = -c;
}

// Pseudo-remainder of a by b; deg a >= deg b >= 1.
Dense prem(Dense a, const Dense &b)
{
    const int db = degree(b);
    const mpz_class &lb = b.back();
    while (!a.empty() && degree(a) >= db) {
        const int shift = degree(a) - db;
        const mpz_class la = a.back();
        for (auto &c : a) c *= lb;
        for (int j = 0; j <= db; ++j)
            mpz_submul(a[static_cast<std::size_t>(shift + j)].get_mpz_t(), la.get_mpz_t(),
                       b[static_cast<std::size_t>(j)].get_mpz_t());
        trim_top(a);
    }
    return a;
}

Dense to_dense(const LaurentPoly &p) { return p.dense(); }

bool divides_exact(Dense r, const Dense &d)
{
    if (degree(r) < degree(d)) return false;
    while (!r.empty() && degree(r) >= degree(d)) {
        if (!mpz_divisible_p(r.back().get_mpz_t(), d.back().get_mpz_t())) return false;
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), r.back().get_mpz_t(), d.back().get_mpz_t());
        const int s = degree(r) - degree(d);
        for (int j = 0; j <= degree(d); ++j)
            mpz_submul(r[static_cast<std::size_t>(s + j)].get_mpz_t(), qc.get_mpz_t(),
                       d[static_cast<std::size_t>(j)].get_mpz_t());
        trim_top(r);
    }
    return r.empty();
}

// Heuristic gcd: evaluate at a large integer, take the integer gcd and
// reconstruct by symmetric xi-adic expansion. Returns an empty vector when
// the heuristic fails to certify its answer.
Dense heuristic_gcd(const Dense &a, const Dense &b)
{
    auto max_norm = [](const Dense &p) {
        mpz_class m = 0;
        for (const auto &c : p) m = std::max(m, mpz_class(abs(c)));
        return m;
    };
    mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    for (int attempt = 0; attempt < 4; ++attempt) {
        auto eval = [&](const Dense &p) {
            mpz_class acc = 0;
            for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * xi + *it;
            return acc;
        };
        mpz_class g;
        mpz_class ea = eval(a);
        mpz_class eb = eval(b);
        mpz_gcd(g.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
        Dense cand;
        mpz_class half = xi / 2;
        while (g != 0) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), g.get_mpz_t(), xi.get_mpz_t());
            if (r > half) r -= xi;
            cand.push_back(r);
            g = (g - r) / xi;
        }
        make_primitive(cand);
        if (!cand.empty() && degree(cand) >= 0) {
            if (divides_exact(a, cand) && divides_exact(b, cand)) return cand;
        }
        xi = xi * 73794 / 27011 + 1;
    }
    return {};
}

Dense primitive_prs_gcd(Dense a, Dense b)
{
    if (degree(a) < degree(b)) std::swap(a, b);
    while (degree(b) > 0) {
        Dense r = prem(a, b);
        if (r.empty()) break;
        strip_low_zeros(r);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (degree(b) == 0) return Dense{mpz_class(1)};
    return b;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly &a, const LaurentPoly &b)
{
    if (a.is_zero() && b.is_zero()) return {};
    auto normalize = [](LaurentPoly p) {
        p = p.shifted(-p.low());
        if (p.lowest_coeff() < 0) p = -p;
        return p;
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);

    Dense da = to_dense(a.shifted(-a.low()));
    Dense db = to_dense(b.shifted(-b.low()));
    mpz_class ca = dense_content(da);
    mpz_class cb = dense_content(db);
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (degree(da) == 0 || degree(db) == 0) return LaurentPoly(c);

    make_primitive(da);
    make_primitive(db);
    Dense g;
    if (da == db) {
        g = da;
    } else {
        g = heuristic_gcd(da, db);
        if (g.empty()) g = primitive_prs_gcd(da, db);
    }
    LaurentPoly out = LaurentPoly::from_dense(0, std::move(g));
    out *= c;
    return normalize(out);
}

LaurentPoly poly_divexact(const LaurentPoly &a, const LaurentPoly &b)
{
    if (b.is_zero()) throw std::domain_error("poly_divexact: division by zero");
    if (a.is_zero()) return {};
    Dense r = a.dense();
    const Dense &d = b.dense();
    const int dd = degree(d);
    if (degree(r) < dd) throw std::logic_error("poly_divexact: divisor does not divide");
    Dense quot(static_cast<std::size_t>(degree(r) - dd + 1), mpz_class(0));
    while (!r.empty() && degree(r) >= dd) {
        const int s = degree(r) - dd;
        if (!mpz_divisible_p(r.back().get_mpz_t(), d.back().get_mpz_t()))
            throw std::logic_error("poly_divexact: divisor does not divide");
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), r.back().get_mpz_t(), d.back().get_mpz_t());
        for (int j = 0; j <= dd; ++j)
            mpz_submul(r[static_cast<std::size_t>(s + j)].get_mpz_t(), qc.get_mpz_t(),
                       d[static_cast<std::size_t>(j)].get_mpz_t());
        quot[static_cast<std::size_t>(s)] = std::move(qc);
        trim_top(r);
    }
    if (!r.empty()) throw std::logic_error("poly_divexact: divisor does not divide");
    return LaurentPoly::from_dense(a.low() - b.low(), std::move(quot));
}

}  // namespace detail

}  // namespace qvertex
