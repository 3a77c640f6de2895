#pragma once

#include <ostream>

#include "qvertex/fock.hpp"
#include "qvertex/rational.hpp"
#include "qvertex/symfun.hpp"

namespace qvertex {

inline std::ostream &operator<<(std::ostream &os, const RationalFunctionQ &r) { return os << r.to_string(); }
inline std::ostream &operator<<(std::ostream &os, const SymFunc &f) { return os << f.to_string(); }
inline std::ostream &operator<<(std::ostream &os, const FockState &s) { return os << s.to_string(); }
inline std::ostream &operator<<(std::ostream &os, const DualFockState &s) { return os << s.to_string(); }

}  // namespace qvertex

namespace oracle {

using qvertex::Partition;
using qvertex::RationalFunctionQ;
using qvertex::SymFunc;

inline RationalFunctionQ q(int k) { return RationalFunctionQ::q_power(k); }
inline RationalFunctionQ one() { return RationalFunctionQ(1); }

inline SymFunc p(std::vector<int> parts, const RationalFunctionQ &c = RationalFunctionQ(1))
{
    return SymFunc::power_sum(Partition(std::move(parts)), c);
}

}  // namespace oracle
