#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace epr {

/// CHSH measurement configuration: two Alice directions (varsigma_i, phi_i)
/// and two Bob polarization angles theta_i.
struct ChshSettings {
    double varsigma1 = 0.0;
    double phi1 = 0.0;
    double theta1 = 0.0;
    double varsigma2 = 0.0;
    double phi2 = 0.0;
    double theta2 = 0.0;
};

/// Left-hand side of the CHSH inequality
///   |C(theta1,a1) + C(theta1,a2) + C(theta2,a2) - C(theta2,a1)|
/// with C = correlation_planar at shared (x, psi). Bounded by 2 sqrt 2.
double chsh_lhs(double x, double psi, const ChshSettings& s);

/// Center-of-mass CHSH left-hand side,
///   2 |sin vs1 sin(phi1-theta1-theta2) sin(theta1-theta2)
///      + sin vs2 cos(phi2-theta1-theta2) cos(theta1-theta2)|.
double chsh_lhs_cm(const ChshSettings& s);

struct ScanSample {
    double x;
    double value;
};

struct ScanExtremum {
    double x = 0.0;
    double value = 0.0;
};

struct ScanResult {
    std::vector<ScanSample> samples;       // strictly increasing in x
    ScanExtremum minimum;                  // golden-refined
    ScanExtremum maximum;                  // golden-refined
    double threshold = 0.0;
    std::vector<double> crossings;         // bisected to 1e-6
    std::vector<std::string> warnings;     // tangential touchings etc.
};

/// Uniform grid scan with golden refinement of the best min/max cells and
/// bisection of every sign change of f - threshold. Deterministic and
/// independent of any evaluation-order partitioning.
ScanResult scan(const std::function<double(double)>& f, double x_lo, double x_hi, int n,
                double threshold = 2.0);

enum class ExtremumMode { minimize, maximize };

/// Golden-section search on [lo, hi] down to |hi - lo| < tol.
/// Throws std::runtime_error if f evaluates non-finite.
std::pair<double, double> golden_extremum(const std::function<double(double)>& f, double lo,
                                          double hi, double tol, ExtremumMode mode);

struct MaximizeResult {
    ChshSettings settings;
    double value = 0.0;
    int starts = 0;
    std::uint64_t seed = 0;
    int best_start = 0;
};

/// Multi-start derivative-free maximization over the six CHSH angles:
/// coordinate-wise grid+golden refinement cycles until the per-cycle
/// improvement drops below tol. Start points come from a fixed
/// linear-congruential sequence; ties resolve to the lowest start index.
MaximizeResult maximize_settings(const std::function<double(const ChshSettings&)>& objective,
                                 int starts, double tol, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// All x in [x_lo, x_hi] where chsh_lhs crosses 2, bisected to 1e-6.
std::vector<double> violation_boundaries(double psi, const ChshSettings& s, double x_lo,
                                         double x_hi);

}  // namespace epr
