#include "eprcorr/chsh.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "eprcorr/correlation.hpp"

namespace epr {

namespace {
const double kTsirelson = 2.0 * std::sqrt(2.0);

void check_tsirelson(double value) {
    if (!(value <= kTsirelson + 1e-9))
        throw std::logic_error("chsh: value exceeds the Tsirelson bound");
}
}  // namespace

double chsh_lhs(double x, double psi, const ChshSettings& s) {
    const double c11 = correlation_planar(x, psi, s.varsigma1, s.phi1, s.theta1);
    const double c12 = correlation_planar(x, psi, s.varsigma2, s.phi2, s.theta1);
    const double c22 = correlation_planar(x, psi, s.varsigma2, s.phi2, s.theta2);
    const double c21 = correlation_planar(x, psi, s.varsigma1, s.phi1, s.theta2);
    const double v = std::abs(c11 + c12 + c22 - c21);
    check_tsirelson(v);
    return v;
}

double chsh_lhs_cm(const ChshSettings& s) {
    const double v =
        2.0 * std::abs(std::sin(s.varsigma1) * std::sin(s.phi1 - s.theta1 - s.theta2) *
                           std::sin(s.theta1 - s.theta2) +
                       std::sin(s.varsigma2) * std::cos(s.phi2 - s.theta1 - s.theta2) *
                           std::cos(s.theta1 - s.theta2));
    check_tsirelson(v);
    return v;
}

std::pair<double, double> golden_extremum(const std::function<double(double)>& f, double lo,
                                          double hi, double tol, ExtremumMode mode) {
    const double sign = (mode == ExtremumMode::minimize) ? 1.0 : -1.0;
    auto g = [&](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) throw std::runtime_error("golden_extremum: non-finite objective");
        return sign * v;
    };
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = g(c), fd = g(d);
    while (std::abs(b - a) > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = g(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

namespace {
double bisect_crossing(const std::function<double(double)>& f, double threshold, double lo,
                       double hi, double tol) {
    double flo = f(lo) - threshold;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid) - threshold;
        if ((flo <= 0.0) == (fmid <= 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}
}  // namespace

ScanResult scan(const std::function<double(double)>& f, double x_lo, double x_hi, int n,
                double threshold) {
    if (!(x_lo < x_hi)) throw std::invalid_argument("scan: need x_lo < x_hi");
    if (n < 2) throw std::invalid_argument("scan: need at least two samples");

    ScanResult result;
    result.threshold = threshold;
    result.samples.resize(static_cast<size_t>(n));
    const double dx = (x_hi - x_lo) / (n - 1);

    // grid evaluation may be partitioned across workers (EPRCORR_WORKERS);
    // samples are written by index, so the result is partition-independent
    int workers = 1;
    if (const char* env = std::getenv("EPRCORR_WORKERS")) workers = std::atoi(env);
    workers = std::clamp(workers, 1, 256);
    auto eval_range = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            const double x = (i == n - 1) ? x_hi : x_lo + i * dx;
            result.samples[static_cast<size_t>(i)] = {x, f(x)};
        }
    };
    if (workers == 1 || n < 4 * workers) {
        eval_range(0, n);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (n + workers - 1) / workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(eval_range, w * chunk, std::min(n, (w + 1) * chunk));
        for (auto& t : pool) t.join();
    }

    int imin = 0, imax = 0;
    for (int i = 1; i < n; ++i) {
        if (result.samples[size_t(i)].value < result.samples[size_t(imin)].value) imin = i;
        if (result.samples[size_t(i)].value > result.samples[size_t(imax)].value) imax = i;
    }
    auto refine = [&](int i, ExtremumMode mode) {
        const double lo = result.samples[size_t(std::max(0, i - 1))].x;
        const double hi = result.samples[size_t(std::min(n - 1, i + 1))].x;
        const auto [x, v] = golden_extremum(f, lo, hi, 1e-10 * std::max(1.0, std::abs(hi)), mode);
        return ScanExtremum{x, v};
    };
    result.minimum = refine(imin, ExtremumMode::minimize);
    result.maximum = refine(imax, ExtremumMode::maximize);

    for (int i = 0; i + 1 < n; ++i) {
        const double f0 = result.samples[size_t(i)].value - threshold;
        const double f1 = result.samples[size_t(i + 1)].value - threshold;
        if ((f0 <= 0.0) != (f1 <= 0.0))
            result.crossings.push_back(bisect_crossing(f, threshold, result.samples[size_t(i)].x,
                                                       result.samples[size_t(i + 1)].x, 1e-6));
    }

    // a refined extremum grazing the threshold without a bracketing sign
    // change is a tangential touch, not a crossing
    for (const ScanExtremum& e : {result.minimum, result.maximum}) {
        if (std::abs(e.value - threshold) < 1e-9) {
            bool counted = false;
            for (double c : result.crossings)
                if (std::abs(c - e.x) < 10.0 * dx) counted = true;
            if (!counted)
                result.warnings.push_back("tangential touching of threshold near x = " +
                                          std::to_string(e.x));
        }
    }
    return result;
}

MaximizeResult maximize_settings(const std::function<double(const ChshSettings&)>& objective,
                                 int starts, double tol, std::uint64_t seed) {
    if (starts < 1) throw std::invalid_argument("maximize_settings: need at least one start");
    constexpr double kTwoPi = 6.283185307179586476925286766559;

    // fixed LCG (MMIX multiplier) so reruns are bit-identical
    std::uint64_t state = seed;
    auto next_angle = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return kTwoPi * (double(state >> 11) * 0x1.0p-53);
    };

    auto coords = [](ChshSettings& s) {
        return std::array<double*, 6>{&s.varsigma1, &s.phi1, &s.theta1,
                                      &s.varsigma2, &s.phi2, &s.theta2};
    };

    MaximizeResult best;
    best.starts = starts;
    best.seed = seed;
    best.value = -1.0;

    for (int start = 0; start < starts; ++start) {
        ChshSettings s;
        for (double* c : coords(s)) *c = next_angle();
        double value = objective(s);

        for (int cycle = 0; cycle < 200; ++cycle) {
            const double before = value;
            for (double* c : coords(s)) {
                auto line = [&](double angle) {
                    const double saved = *c;
                    *c = angle;
                    const double v = objective(s);
                    *c = saved;
                    return v;
                };
                // coarse grid guards against 1D multimodality, golden refines
                constexpr int kGrid = 32;
                int ibest = 0;
                double fbest = line(0.0);
                for (int i = 1; i < kGrid; ++i) {
                    const double v = line(kTwoPi * i / kGrid);
                    if (v > fbest) {
                        fbest = v;
                        ibest = i;
                    }
                }
                const double lo = kTwoPi * (ibest - 1) / kGrid;
                const double hi = kTwoPi * (ibest + 1) / kGrid;
                const auto [xstar, fstar] =
                    golden_extremum(line, lo, hi, 1e-11, ExtremumMode::maximize);
                if (fstar >= value) {
                    *c = xstar;
                    value = fstar;
                }
            }
            if (value - before < tol) break;
        }

        if (value > best.value) {  // strict: ties go to the lowest start index
            best.value = value;
            best.settings = s;
            best.best_start = start;
        }
    }
    return best;
}

std::vector<double> violation_boundaries(double psi, const ChshSettings& s, double x_lo,
                                         double x_hi) {
    const ScanResult r = scan([&](double x) { return chsh_lhs(x, psi, s); }, x_lo, x_hi, 512, 2.0);
    return r.crossings;
}

}  // namespace epr
