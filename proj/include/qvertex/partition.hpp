#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qvertex/rational.hpp"

namespace qvertex {

/// Integer partition stored as a weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    /// Sorts the parts first; zeros are dropped.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// i-th part (0-based), 0 beyond the length.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    int multiplicity(int i) const;
    /// part size -> multiplicity m_i, for parts present
    std::map<int, int> multiplicities() const;

    /// Union of parts, i.e. the partition indexing p_lambda * p_mu.
    Partition joined(const Partition &o) const;
    /// Removes one copy of part `n`; throws if absent.
    Partition without_part(int n) const;

    std::string to_string() const;

    friend bool operator==(const Partition &a, const Partition &b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition &a, const Partition &b) { return !(a == b); }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Key order used throughout: by weight, then reverse-lexicographic
/// (so (3) comes before (2,1) before (1,1,1)).
struct PartitionOrder {
    bool operator()(const Partition &a, const Partition &b) const;
};

/// All partitions of n in reverse-lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Classical z_lambda = prod_i i^{m_i} m_i!.
mpz_class z_classical(const Partition &la);

/// z_lambda(s,t) = prod_i i^{m_i} ((1 - s^i)/(1 - t^i))^{m_i} m_i!.
template <class F>
F z_st(const Partition &la, const F &s, const F &t);

/// z_lambda(q) = prod_i i^{m_i} (1 + q^{2i})^{m_i} m_i!; checked against z_st(la, q^4, q^2).
RationalFunctionQ z_q(const Partition &la);

/// Dominance order; throws std::invalid_argument for unequal weights.
bool dominance_leq(const Partition &la, const Partition &mu);

// --- implementation -------------------------------------------------------

template <class F>
F z_st(const Partition &la, const F &s, const F &t)
{
    F out(1);
    for (auto [i, m] : la.multiplicities()) {
        F den = F(1) - t.pow(i);
        if (den.is_zero())
            throw std::domain_error("z_st: 1 - t^" + std::to_string(i) + " vanishes");
        F factor = (F(1) - s.pow(i)) / den;
        mpz_class im = 1;
        for (int k = 0; k < m; ++k) im *= i;
        for (int k = 2; k <= m; ++k) im *= k;
        out *= F(im) * factor.pow(m);
    }
    return out;
}

}  // namespace qvertex
