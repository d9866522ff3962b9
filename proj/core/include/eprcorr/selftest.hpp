#pragma once

#include <array>
#include <string>
#include <vector>

#include "eprcorr/matrices.hpp"

namespace epr::selftest {

struct CheckResult {
    std::string name;
    double tolerance = 0.0;
    double residual = 0.0;
    bool pass = false;
    std::string note;  // optional commentary carried into the report
};

/// Fault injection for negative-control testing of the check machinery.
enum class Fault {
    none,
    corrupt_gamma2,  // perturbs the gamma^2 constant fed to the algebra checks
};

/// Worst violation of {gamma^mu, gamma^nu} = 2 eta^{mu nu} over the given set.
double clifford_residual(const std::array<BispinorMatrix, 4>& gammas);

/// Runs every module's invariant suite with fixed seeds. Deterministic.
std::vector<CheckResult> run_selftests(Fault fault = Fault::none);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace epr::selftest
