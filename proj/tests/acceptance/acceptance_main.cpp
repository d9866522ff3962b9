// Acceptance suite: reproduces the published extremum locations, CHSH
// violation windows and algebraic identities at fixed tolerances, printing
// one PASS/FAIL line per criterion. Returns the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "eprcorr/chsh.hpp"
#include "eprcorr/correlation.hpp"
#include "eprcorr/decay.hpp"
#include "eprcorr/dirac.hpp"
#include "eprcorr/nonrel.hpp"
#include "eprcorr/photon.hpp"
#include "eprcorr/selftest.hpp"

namespace {

using namespace epr;

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
const double kTsirelson = 2.0 * std::sqrt(2.0);

double urand(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

ThreeDirection rand_dir(std::mt19937_64& rng) {
    const double z = 2.0 * urand(rng) - 1.0;
    const double phi = kTwoPi * urand(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return ThreeDirection::normalized({r * std::cos(phi), r * std::sin(phi), z});
}

ThreeDirection rand_orthogonal(std::mt19937_64& rng, const ThreeDirection& n) {
    while (true) {
        const ThreeVector c = cross(n.vec(), rand_dir(rng).vec());
        if (c.norm() > 1e-6) return ThreeDirection::normalized(c);
    }
}

LorentzTransform rand_proper_transform(std::mt19937_64& rng) {
    return rotation_about_axis(rand_dir(rng), kPi * urand(rng)) *
           pure_boost(rand_dir(rng), 3.0 * urand(rng) - 1.5) *
           rotation_about_axis(rand_dir(rng), kPi * urand(rng));
}

int g_failures = 0;
double g_max_abs_corr = 0.0;   // tracked across criteria for the bound check
double g_max_chsh = 0.0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %2d  %-28s %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

double track_corr(double c) {
    g_max_abs_corr = std::max(g_max_abs_corr, std::abs(c));
    return c;
}

double track_chsh(double v) {
    g_max_chsh = std::max(g_max_chsh, v);
    return v;
}

// 1. trace route vs closed form on 1000 random configurations
void criterion_dual_method() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const double m = 0.5 + 1.5 * urand(rng);
        const double M = m * (1.0 + 9.0 * urand(rng) + 1e-3);  // M/m in (1, 10]
        DecayKinematics kin = cm_kinematics(M, m, rand_dir(rng));
        if (t % 2 == 1) {
            const LorentzTransform l = rand_proper_transform(rng);
            kin = DecayKinematics(l.apply(kin.p()), l.apply(kin.k()), m);
        }
        const BlochVector xi(urand(rng) * rand_dir(rng).vec());
        const MeasurementSettings s{rand_dir(rng), kTwoPi * urand(rng)};
        const ThreeDirection a_k = rand_orthogonal(rng, kin.photon_direction());
        const double ct = track_corr(correlation_trace(kin, xi, s, a_k));
        const double cc = track_corr(correlation_closed(kin, xi, s, a_k));
        worst = std::max(worst, std::abs(ct - cc));
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[160];
    std::snprintf(buf, sizeof(buf), "|trace - closed| max %.3g (tol 1e-10), %.2f s (limit 5 s)",
                  worst, secs);
    report(1, "dual-method oracle", worst < 1e-10 && secs < 5.0, buf);
}

// 2. figure 3: maximum 1/2 at x = 1.36
void criterion_fig3() {
    auto f = [](double x) { return correlation_planar(x, kPi / 3, kPi / 4, kPi / 4, kPi / 3); };
    const ScanResult r = scan(f, 0.0, 5.0, 512, 2.0);
    track_corr(r.maximum.value);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "x* = %.4f (1.36 +- 0.01), C* = %.4f (0.500 +- 0.001)",
                  r.maximum.x, r.maximum.value);
    report(2, "figure 3 maximum",
           std::abs(r.maximum.x - 1.36) < 0.01 && std::abs(r.maximum.value - 0.5) < 0.001, buf);
}

// 3. figure 2: minimum located at x = 1/3; value reported by dual evaluation
void criterion_fig2() {
    auto f = [](double x) {
        return correlation_planar(x, kPi / 3, 2 * kPi / 3, 3 * kPi / 2, kPi / 4);
    };
    const ScanResult r = scan(f, 0.0, 5.0, 512, 2.0);
    track_corr(r.minimum.value);

    const DecayKinematics kin = planar_kinematics(1.0, 1.0 / 3.0, kPi / 3, 1.0);
    const MeasurementSettings s{alice_direction(2 * kPi / 3, 3 * kPi / 2), kPi / 4};
    const double ct = track_corr(correlation_trace(kin, BlochVector(0, 0, 1), s, {0, 0, 1}));
    const double cc = track_corr(correlation_closed(kin, BlochVector(0, 0, 1), s, {0, 0, 1}));

    bool documented = false;
    for (const auto& c : selftest::run_selftests())
        if (c.name == "fig2_minimum_dual_method" && !c.note.empty() &&
            c.note.find("-0.87") != std::string::npos)
            documented = c.pass;

    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "x* = %.4f (0.3333 +- 0.005), dual value %.6f (|d| = %.2g, caption -0.87 "
                  "documented: %s)",
                  r.minimum.x, cc, std::abs(ct - cc), documented ? "yes" : "no");
    report(3, "figure 2 minimum",
           std::abs(r.minimum.x - 1.0 / 3.0) < 0.005 && std::abs(ct - cc) < 1e-10 && documented,
           buf);
}

// 4. figure 4: maximum 2.598 at 0.71, single crossing at 6.38
void criterion_fig4() {
    const ChshSettings s{2 * kPi / 3, 3 * kPi / 2, 2 * kPi / 3, kPi / 3, kPi, kPi / 3};
    const ScanResult r =
        scan([&](double x) { return track_chsh(chsh_lhs(x, kPi / 6, s)); }, 0.0, 20.0, 512, 2.0);
    const bool ok = std::abs(r.maximum.value - 2.598) < 0.005 &&
                    std::abs(r.maximum.x - 0.71) < 0.02 && r.crossings.size() == 1 &&
                    std::abs(r.crossings[0] - 6.38) < 0.02;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "max %.4f at %.4f, crossing at %.4f", r.maximum.value,
                  r.maximum.x, r.crossings.empty() ? -1.0 : r.crossings[0]);
    report(4, "figure 4 reproduction", ok, buf);
}

// 5. figure 5: maximum 2.284 at 1.77, violation window (0.21, 6.54)
void criterion_fig5() {
    const ChshSettings s{kPi / 6, kPi / 2, 3 * kPi / 4, kPi / 3, kPi / 3, kPi / 2};
    const ScanResult r =
        scan([&](double x) { return track_chsh(chsh_lhs(x, kPi / 6, s)); }, 0.0, 20.0, 512, 2.0);
    const bool ok = std::abs(r.maximum.value - 2.284) < 0.005 &&
                    std::abs(r.maximum.x - 1.77) < 0.02 && r.crossings.size() == 2 &&
                    std::abs(r.crossings[0] - 0.21) < 0.02 && std::abs(r.crossings[1] - 6.54) < 0.02;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "max %.4f at %.4f, crossings %.4f and %.4f", r.maximum.value,
                  r.maximum.x, r.crossings.size() > 0 ? r.crossings[0] : -1.0,
                  r.crossings.size() > 1 ? r.crossings[1] : -1.0);
    report(5, "figure 5 reproduction", ok, buf);
}

// 6. figure 6: violated on the whole domain, maximal in the non-relativistic point
void criterion_fig6() {
    const ChshSettings s{kPi / 2, 3 * kPi / 4, kPi / 4, kPi / 2, kPi / 4, 0.0};
    const ScanResult r =
        scan([&](double x) { return track_chsh(chsh_lhs(x, 2 * kPi / 3, s)); }, 0.0, 20.0, 512, 2.0);
    bool above = true, monotone = true;
    for (size_t i = 0; i < r.samples.size(); ++i) {
        if (r.samples[i].value <= 2.0) above = false;
        if (i > 0 && r.samples[i].value > r.samples[i - 1].value + 1e-12) monotone = false;
    }
    const double at0 = chsh_lhs(0.0, 2 * kPi / 3, s);
    const bool ok = above && monotone && std::abs(at0 - kTsirelson) < 1e-9;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "LHS(0) - 2sqrt2 = %.2g, all > 2: %s, non-increasing: %s",
                  at0 - kTsirelson, above ? "yes" : "no", monotone ? "yes" : "no");
    report(6, "figure 6 behavior", ok, buf);
}

// 7. c.m. maximal violation
void criterion_cm_max() {
    const ChshSettings s{kPi / 2, 3 * kPi / 4, kPi / 4, kPi / 2, kPi / 4, 0.0};
    const double direct = track_chsh(chsh_lhs_cm(s));
    const MaximizeResult r = maximize_settings(
        [](const ChshSettings& c) { return track_chsh(chsh_lhs_cm(c)); }, 24, 1e-10);
    const bool ok = std::abs(direct - kTsirelson) < 1e-12 && std::abs(r.value - kTsirelson) < 1e-6;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "closed-form config: 2sqrt2 %+.2g, optimizer: 2sqrt2 %+.2g",
                  direct - kTsirelson, r.value - kTsirelson);
    report(7, "c.m. maximal violation", ok, buf);
}

// 8. limit consistency at x = 1e-8 and x = 1e8
void criterion_limits() {
    std::mt19937_64 rng(108);
    double w0 = 0.0, winf = 0.0;
    for (int t = 0; t < 100; ++t) {
        const double vs = kPi * urand(rng);
        const double phi = kTwoPi * urand(rng);
        const double th = kTwoPi * urand(rng);
        const double psi = 0.1 * kPi + 1.8 * kPi * urand(rng);
        w0 = std::max(w0, std::abs(track_corr(correlation_planar(1e-8, psi, vs, phi, th)) -
                                   correlation_nonrel_limit(vs, phi, th)));
        winf = std::max(winf, std::abs(track_corr(correlation_planar(1e8, psi, vs, phi, th)) -
                                       correlation_ultrarel(vs, phi, psi, th)));
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "x->0 gap %.3g, x->inf gap %.3g (tol 1e-3)", w0, winf);
    report(8, "limit consistency", w0 < 1e-3 && winf < 1e-3, buf);
}

// 9. appendix identities
void criterion_appendix_identities() {
    std::mt19937_64 rng(109);
    double wv = 0.0, ww = 0.0, wf = 0.0, wr = 0.0;

    for (int t = 0; t < 100; ++t) {
        const double m = 0.5 + 1.5 * urand(rng);
        const ThreeVector pv = 3.0 * (2.0 * urand(rng) - 1.0) * rand_dir(rng).vec();
        const FourVector p{std::sqrt(m * m + dot(pv, pv)), pv.x, pv.y, pv.z};
        const BispinorAmplitude v = v_amplitude(p, m);
        wv = std::max(wv, max_abs_diff(dirac_adjoint(v) * v, SpinorMatrix::identity()));
        wv = std::max(wv, max_abs_diff(v * dirac_adjoint(v),
                                       (1.0 / (2.0 * m)) *
                                           (m * BispinorMatrix::identity() + slash(p))));

        const ThreeDirection n = rand_dir(rng);
        LorentzTransform l;
        BispinorMatrix d;
        if (t % 2 == 0) {
            const double angle = kPi * urand(rng);
            l = rotation_about_axis(n, angle);
            d = bispinor_rep(RepKind::rotation, n, angle);
        } else {
            const double chi = 3.0 * urand(rng) - 1.5;
            l = pure_boost(n, chi);
            d = bispinor_rep(RepKind::boost, n, chi);
        }
        const SpinorMatrix dw = su2_of_rotation(wigner_rotation(l, p, m));
        ww = std::max(ww, max_abs_diff(d * v * dw.transpose(), v_amplitude(l.apply(p), m)));

        // photon completeness
        const double k0 = 0.2 + 5.0 * urand(rng);
        const ThreeDirection n_k = rand_dir(rng);
        const FourVector k{k0, k0 * n_k.x(), k0 * n_k.y(), k0 * n_k.z()};
        const ThreeDirection a_k = rand_orthogonal(rng, n_k);
        const FieldStrength fp = field_strength(k, +1, a_k);
        const FieldStrength fm = field_strength(k, -1, a_k);
        auto eta = [](int A, int B) { return A == B ? (A == 0 ? 1.0 : -1.0) : 0.0; };
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
                for (int mup = 0; mup < 4; ++mup)
                    for (int nup = 0; nup < 4; ++nup) {
                        const std::complex<double> lhs = std::conj(fp(mu, nu)) * fp(mup, nup) +
                                                         std::conj(fm(mu, nu)) * fm(mup, nup);
                        const double rhs =
                            eta(mu, nup) * k[nu] * k[mup] + eta(nu, mup) * k[mu] * k[nup] -
                            eta(mu, mup) * k[nu] * k[nup] - eta(nu, nup) * k[mu] * k[mup];
                        wf = std::max(wf, std::abs(lhs - rhs) / (k0 * k0));
                    }

        // density identities
        const double M = m * (1.0 + 9.0 * urand(rng) + 1e-3);
        const DecayKinematics kin = cm_kinematics(M, m, rand_dir(rng));
        const BlochVector xi(urand(rng) * rand_dir(rng).vec());
        const BispinorMatrix rho = parent_density(kin, xi);
        wr = std::max(wr, std::abs(rho.trace() - 1.0));
        wr = std::max(wr, max_abs_diff(slash(kin.q()) * rho, M * rho) / M);
        wr = std::max(wr, std::abs(minkowski_dot(pauli_lubanski_mean(kin, xi), kin.q())) / (M * M));
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "v(p) %.2g (1e-12), Weinberg %.2g (1e-10), completeness %.2g (1e-10), rho %.2g "
                  "(1e-12)",
                  wv, ww, wf, wr);
    report(9, "appendix identities", wv < 1e-12 && ww < 1e-10 && wf < 1e-10 && wr < 1e-12, buf);
}

// 10. appendix B equivalences
void criterion_appendix_b() {
    std::mt19937_64 rng(110);
    const ThreeDirection n_k{1, 0, 0};
    const ThreeDirection a_k{0, 0, 1};
    double wo = 0.0, wn = 0.0;
    for (int t = 0; t < 100; ++t) {
        const BlochVector xi(urand(rng) * rand_dir(rng).vec());
        const ThreeDirection a = rand_dir(rng);
        const double th = kTwoPi * urand(rng);
        wo = std::max(wo, std::abs(nonrel::correlation(xi, a, th, n_k, a_k) -
                                   nonrel::correlation_closed_form(xi, a, th)));
        const double vs = kPi * urand(rng);
        const double phi = kTwoPi * urand(rng);
        wn = std::max(wn, std::abs(1.5 * nonrel::correlation_closed_form(
                                             BlochVector(0, 0, 1), alice_direction(vs, phi), th) -
                                   correlation_nonrel_limit(vs, phi, th)));
    }

    const Spin1Matrix h = nonrel::helicity_states(n_k, a_k);
    const double r = 1.0 / std::sqrt(2.0);
    Spin1Matrix printed;
    printed(0, 0) = -0.5; printed(1, 0) = -r;  printed(2, 0) = -0.5;
    printed(0, 1) = r;    printed(1, 1) = 0.0; printed(2, 1) = -r;
    printed(0, 2) = 0.5;  printed(1, 2) = -r;  printed(2, 2) = 0.5;
    const double wh = max_abs_diff(h, printed);

    char buf[180];
    std::snprintf(buf, sizeof(buf),
                  "operator vs closed %.2g, normalization %.2g, expansions %.2g (tol 1e-12)", wo,
                  wn, wh);
    report(10, "appendix B equivalences", wo < 1e-12 && wn < 1e-12 && wh < 1e-12, buf);
}

// 11. physical bounds over everything evaluated so far
void criterion_bounds() {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "max |C| - 1 = %.2g, max CHSH - 2sqrt2 = %.2g",
                  g_max_abs_corr - 1.0, g_max_chsh - kTsirelson);
    report(11, "physical bounds", g_max_abs_corr <= 1.0 + 1e-12 && g_max_chsh <= kTsirelson + 1e-12,
           buf);
}

// 12. photon-energy invariance across four decades
void criterion_k0_invariance() {
    std::mt19937_64 rng(112);
    const ThreeDirection a_k{0, 0, 1};
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const double x = 30.0 * urand(rng);
        const double psi = kTwoPi * urand(rng);
        const MeasurementSettings s{rand_dir(rng), kTwoPi * urand(rng)};
        const BlochVector xi(0, 0, 1);
        const double ref =
            track_corr(correlation_closed(planar_kinematics(1.0, x, psi, 0.1), xi, s, a_k));
        for (double k0 : {1.0, 10.0, 100.0}) {
            const double v =
                track_corr(correlation_closed(planar_kinematics(1.0, x, psi, k0), xi, s, a_k));
            worst = std::max(worst, std::abs(v - ref));
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "max spread over k0 in {0.1,1,10,100} m: %.3g (tol 1e-10)",
                  worst);
    report(12, "k0 invariance", worst < 1e-10, buf);
}

}  // namespace

int main() {
    criterion_dual_method();
    criterion_fig3();
    criterion_fig2();
    criterion_fig4();
    criterion_fig5();
    criterion_fig6();
    criterion_cm_max();
    criterion_limits();
    criterion_appendix_identities();
    criterion_appendix_b();
    criterion_bounds();
    criterion_k0_invariance();

    std::printf("%d of 12 criteria passed\n", 12 - g_failures);
    return g_failures;
}
