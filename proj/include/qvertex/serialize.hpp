#pragma once

#include <string>

#include "json.hpp"
#include "qvertex/coeff.hpp"
#include "qvertex/fock.hpp"

namespace qvertex {

using nlohmann::json;

/// [[exponent, "integer"], ...] with exponents ascending.
json to_json(const LaurentPoly &p);
LaurentPoly laurent_from_json(const json &j);

/// {"num": [...], "den": [...]}.
json to_json(const RationalFunctionQ &r);
RationalFunctionQ rational_from_json(const json &j);

/// Descending array of parts.
json to_json(const Partition &p);
Partition partition_from_json(const json &j);

/// {"basis": "powersum", "terms": [{"partition": [...], "coeff": ...}, ...]}.
json to_json(const SymFunc &f);
SymFunc symfunc_from_json(const json &j);

/// {"sym": ..., "lattice_k": k, "sigma_twice": s}.
json to_json(const FockState &s);
json to_json(const DualFockState &s);
FockState fock_state_from_json(const json &j);

/// {"order": N, "coeffs": [...]}.
json to_json(const PowerSeriesX &s);

/// "p/r" or "p" for an exact rational.
std::string rational_string(const mpq_class &x);
/// Parses "p/r" or "p"; throws std::invalid_argument.
mpq_class parse_rational(const std::string &s);

/// The coefficients evaluated at q: same shape as to_json(f) with string coefficients.
/// Throws std::domain_error if q hits a pole.
json evaluated_json(const SymFunc &f, const mpq_class &q);

/// Rows "partition,coefficient-numerator,coefficient-denominator" with a header.
std::string to_csv(const SymFunc &f);

}  // namespace qvertex
