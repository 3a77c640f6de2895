#include "qvertex/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qvertex {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::map<int, int> Partition::multiplicities() const
{
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
}

Partition Partition::joined(const Partition &o) const
{
    std::vector<int> merged;
    merged.reserve(parts_.size() + o.parts_.size());
    std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(), std::back_inserter(merged),
               std::greater<>());
    Partition p;
    p.parts_ = std::move(merged);
    p.weight_ = weight_ + o.weight_;
    return p;
}

Partition Partition::without_part(int n) const
{
    auto it = std::find(parts_.begin(), parts_.end(), n);
    if (it == parts_.end()) throw std::invalid_argument("Partition: part not present");
    Partition p = *this;
    p.parts_.erase(p.parts_.begin() + (it - parts_.begin()));
    p.weight_ -= n;
    return p;
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

bool PartitionOrder::operator()(const Partition &a, const Partition &b) const
{
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(), a.parts().end());
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int> &prefix, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate(n, n, prefix, out);
    return out;
}

mpz_class z_classical(const Partition &la)
{
    mpz_class z = 1;
    for (auto [i, m] : la.multiplicities()) {
        for (int k = 0; k < m; ++k) z *= i;
        for (int k = 2; k <= m; ++k) z *= k;
    }
    return z;
}

RationalFunctionQ z_q(const Partition &la)
{
    static std::mutex mu;
    static std::map<std::vector<int>, RationalFunctionQ> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(la.parts());
        if (it != cache.end()) return it->second;
    }
    LaurentPoly prod(z_classical(la));
    for (auto [i, m] : la.multiplicities())
        for (int k = 0; k < m; ++k) prod *= LaurentPoly(1) + LaurentPoly::monomial(1, 2 * i);
    RationalFunctionQ direct(prod);
    if (direct != z_st(la, RationalFunctionQ::q_power(4), RationalFunctionQ::q_power(2)))
        throw std::logic_error("z_q: disagreement with z_st(q^4, q^2) for " + la.to_string());
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(la.parts(), direct);
    return direct;
}

bool dominance_leq(const Partition &la, const Partition &mu)
{
    if (la.weight() != mu.weight()) throw std::invalid_argument("dominance_leq: partitions of unequal weight");
    int sa = 0, sb = 0;
    const std::size_t len = std::max(la.parts().size(), mu.parts().size());
    for (std::size_t i = 0; i < len; ++i) {
        sa += la.part(i);
        sb += mu.part(i);
        if (sa > sb) return false;
    }
    return true;
}

}  // namespace qvertex
