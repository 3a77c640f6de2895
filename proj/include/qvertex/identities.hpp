#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qvertex/serialize.hpp"

namespace qvertex {

/// Outcome of one identity check.
struct IdentityReport {
    std::string identity;
    int order = 0;
    bool ok = true;
    std::string first_discrepancy;  // empty when ok
    int checked = 0;
};

/// Names accepted by run_identity, in report order.
const std::vector<std::string> &identity_names();

/// Runs one identity. `order` is the truncation order or index bound;
/// `max_weight` bounds the partition weights of the Macdonald checks
/// (defaults to order). Internal consistency failures become failing reports.
IdentityReport run_identity(const std::string &name, int order, std::optional<int> max_weight = std::nullopt);

/// {"identity", "order", "status", "first_discrepancy"}.
json to_json(const IdentityReport &r);

}  // namespace qvertex
