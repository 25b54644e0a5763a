#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bistellar/exchange_matrix.hpp"

namespace bistellar {
namespace verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the full built-in fixture verification (one entry per acceptance
/// criterion). Deterministic; expensive checks stay at desk scale.
std::vector<CheckResult> run_all();

bool all_passed(const std::vector<CheckResult>& results);

/// Frozen reference matrices for the built-in fixtures, exposed for the
/// test suites.
ExchangeMatrix reference_b_boundary4();                // 10x10
ExchangeMatrix reference_b_local_alpha(int h);         // 5x5 (h=1) / 12x12 (h=2)
ExchangeMatrix reference_b_local_beta(int h);          // paper row order
std::vector<Simplex> reference_beta_index(int h);      // the printed row order

}  // namespace verify
}  // namespace bistellar
