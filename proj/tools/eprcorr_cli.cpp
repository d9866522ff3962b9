// eprcorr: evaluates the fermion-photon correlation function and the CHSH
// inequality for the two-body decay configuration, scans them against the
// momentum parameter x = (|p|/m)^2, and runs the library's invariant suite.
//
// Exit codes: 0 success, 1 usage error, 2 invalid physics input,
// 3 selftest failure.

#include <clocale>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eprcorr/chsh.hpp"
#include "eprcorr/correlation.hpp"
#include "eprcorr/decay.hpp"
#include "eprcorr/nonrel.hpp"
#include "eprcorr/selftest.hpp"

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;

std::string format_value(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

struct FigurePreset {
    double psi;
    // correlation scans use the first triple only
    double varsigma1, phi1, theta1;
    double varsigma2, phi2, theta2;
    bool chsh;
};

FigurePreset figure_preset(int figure) {
    switch (figure) {
        case 2:
            return {kPi / 3, 2 * kPi / 3, 3 * kPi / 2, kPi / 4, 0, 0, 0, false};
        case 3:
            return {kPi / 3, kPi / 4, kPi / 4, kPi / 3, 0, 0, 0, false};
        case 4:
            return {kPi / 6, 2 * kPi / 3, 3 * kPi / 2, 2 * kPi / 3, kPi / 3, kPi, kPi / 3, true};
        case 5:
            return {kPi / 6, kPi / 6, kPi / 2, 3 * kPi / 4, kPi / 3, kPi / 3, kPi / 2, true};
        case 6:
            return {2 * kPi / 3, kPi / 2, 3 * kPi / 4, kPi / 4, kPi / 2, kPi / 4, 0.0, true};
        default:
            throw CLI::ValidationError("--figure", "figure must be one of 2,3,4,5,6");
    }
}

json extremum_json(const epr::ScanExtremum& e, int digits) {
    return {{"x", json::parse(format_value(e.x, digits))},
            {"value", json::parse(format_value(e.value, digits))}};
}

void emit_scan(const epr::ScanResult& r, bool summary, int digits) {
    std::string out = "x,value\n";
    for (const auto& s : r.samples)
        out += format_value(s.x, digits) + "," + format_value(s.value, digits) + "\n";
    if (summary) {
        json j;
        j["minimum"] = extremum_json(r.minimum, digits);
        j["maximum"] = extremum_json(r.maximum, digits);
        j["threshold"] = r.threshold;
        j["crossings"] = json::array();
        for (double c : r.crossings) j["crossings"].push_back(json::parse(format_value(c, digits)));
        if (!r.warnings.empty()) j["warnings"] = r.warnings;
        out += j.dump() + "\n";
    }
    std::fputs(out.c_str(), stdout);
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");

    CLI::App app{"relativistic fermion-photon EPR correlations and CHSH analysis"};
    app.require_subcommand(1);
    app.fallthrough();  // --digits / --deg may follow the subcommand

    int digits = 12;
    bool degrees = false;
    app.add_option("--digits", digits, "output precision in significant digits")
        ->check(CLI::Range(6, 17))
        ->capture_default_str();
    app.add_flag("--deg", degrees, "interpret angle arguments as degrees");

    auto rad = [&](double a) { return degrees ? a * kPi / 180.0 : a; };

    // --- eval -----------------------------------------------------------------
    auto* eval = app.add_subcommand("eval", "evaluate the correlation function at one point");
    double e_x = 0.0, e_psi = 0.0, e_vs = 0.0, e_phi = 0.0, e_theta = 0.0;
    double e_m = 1.0, e_k0 = 1.0;
    std::vector<double> e_xi{0.0, 0.0, 1.0};
    bool e_planar = false, e_cm = false, e_cross = false;
    int e_figure = 0;
    eval->add_flag("--planar", e_planar, "planar parametrized form (the default mode)");
    eval->add_option("--x", e_x, "squared fermion momentum in fermion-mass units");
    eval->add_option("--psi", e_psi, "fermion momentum angle in the xy plane [rad]");
    eval->add_option("--sigma", e_vs, "Alice polar angle varsigma [rad]");
    eval->add_option("--phi", e_phi, "Alice azimuthal angle [rad]");
    eval->add_option("--theta", e_theta, "Bob polarization angle [rad]");
    eval->add_option("--m", e_m, "fermion mass (cross-check kinematics)")->capture_default_str();
    eval->add_option("--k0", e_k0, "photon energy (cross-check kinematics)")->capture_default_str();
    eval->add_option("--xi", e_xi, "parent Bloch vector (c.m. mode)")->expected(3);
    eval->add_flag("--cm", e_cm, "center-of-mass closed form instead of the planar form")
        ->excludes("--planar");
    eval->add_flag("--cross-check", e_cross,
                   "evaluate the trace, closed and planar routes and report the spread");
    eval->add_option("--figure", e_figure, "inject the caption angles of figure 2 or 3");

    // --- scan / chsh-scan -------------------------------------------------------
    auto* scan_cmd = app.add_subcommand("scan", "scan the planar correlation over x (CSV)");
    auto* chsh_scan = app.add_subcommand("chsh-scan", "scan the CHSH left-hand side over x (CSV)");
    double s_lo = 0.0, s_hi = 20.0;
    int s_n = 512;
    bool s_summary = false;
    double s_psi = 0.0, s_vs = 0.0, s_phi = 0.0, s_theta = 0.0;
    int s_figure = 0;
    epr::ChshSettings cs;
    for (auto* c : {scan_cmd, chsh_scan}) {
        c->add_option("--x-lo", s_lo, "grid start")->capture_default_str();
        c->add_option("--x-hi", s_hi, "grid end")->capture_default_str();
        c->add_option("--n", s_n, "grid size")->check(CLI::Range(2, 10000000))
            ->capture_default_str();
        c->add_flag("--summary", s_summary, "append a JSON footer with extrema and crossings");
        c->add_option("--psi", s_psi, "fermion momentum angle [rad]");
        c->add_option("--figure", s_figure, "inject a figure's caption parameters");
    }
    scan_cmd->add_option("--sigma", s_vs, "Alice polar angle [rad]");
    scan_cmd->add_option("--phi", s_phi, "Alice azimuthal angle [rad]");
    scan_cmd->add_option("--theta", s_theta, "Bob polarization angle [rad]");
    chsh_scan->add_option("--sigma1", cs.varsigma1, "first Alice polar angle [rad]");
    chsh_scan->add_option("--phi1", cs.phi1, "first Alice azimuthal angle [rad]");
    chsh_scan->add_option("--theta1", cs.theta1, "first Bob angle [rad]");
    chsh_scan->add_option("--sigma2", cs.varsigma2, "second Alice polar angle [rad]");
    chsh_scan->add_option("--phi2", cs.phi2, "second Alice azimuthal angle [rad]");
    chsh_scan->add_option("--theta2", cs.theta2, "second Bob angle [rad]");

    // --- chsh-max -----------------------------------------------------------------
    auto* chsh_max = app.add_subcommand("chsh-max", "maximize the CHSH left-hand side over angles");
    bool m_cm = false;
    double m_x = 0.0, m_psi = 0.0, m_tol = 1e-10;
    int m_starts = 24;
    std::uint64_t m_seed = 0x9e3779b97f4a7c15ULL;
    chsh_max->add_flag("--cm", m_cm, "maximize the center-of-mass form");
    chsh_max->add_option("--x", m_x, "fixed x for the planar form");
    chsh_max->add_option("--psi", m_psi, "fixed psi for the planar form");
    chsh_max->add_option("--starts", m_starts, "number of multistart points")
        ->check(CLI::Range(1, 10000))->capture_default_str();
    chsh_max->add_option("--tol", m_tol, "per-cycle improvement tolerance")->capture_default_str();
    chsh_max->add_option("--seed", m_seed, "start-point generator seed")->capture_default_str();

    // --- selftest -------------------------------------------------------------------
    auto* selftest = app.add_subcommand("selftest", "run the full invariant suite");
    bool st_corrupt = false;
    selftest->add_flag("--corrupt-gamma", st_corrupt,
                       "negative control: corrupt a gamma constant fed to the algebra checks")
        ->group("");  // hidden testing aid

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (*eval) {
            if (e_figure != 0) {
                const FigurePreset f = figure_preset(e_figure);
                if (f.chsh) throw CLI::ValidationError("--figure", "eval takes figure 2 or 3");
                e_psi = f.psi;
                e_vs = f.varsigma1;
                e_phi = f.phi1;
                e_theta = f.theta1;
            } else {
                e_psi = rad(e_psi);
                e_vs = rad(e_vs);
                e_phi = rad(e_phi);
                e_theta = rad(e_theta);
            }
            if (e_cm) {
                const epr::BlochVector xi(epr::ThreeVector{e_xi[0], e_xi[1], e_xi[2]});
                const epr::MeasurementSettings s{epr::alice_direction(e_vs, e_phi), e_theta};
                const double c = epr::correlation_cm(xi, s, epr::ThreeDirection{1.0, 0.0, 0.0},
                                                     epr::ThreeDirection{0.0, 0.0, 1.0});
                std::printf("%s\n", format_value(c, digits).c_str());
            } else if (e_cross) {
                const epr::DecayKinematics kin = epr::planar_kinematics(e_m, e_x, e_psi, e_k0);
                const epr::BlochVector xi(0.0, 0.0, 1.0);
                const epr::MeasurementSettings s{epr::alice_direction(e_vs, e_phi), e_theta};
                const epr::ThreeDirection a_k{0.0, 0.0, 1.0};
                const double ct = epr::correlation_trace(kin, xi, s, a_k);
                const double cc = epr::correlation_closed(kin, xi, s, a_k);
                const double cp = epr::correlation_planar(e_x, e_psi, e_vs, e_phi, e_theta);
                json j;
                j["trace"] = json::parse(format_value(ct, 17));
                j["closed"] = json::parse(format_value(cc, 17));
                j["planar"] = json::parse(format_value(cp, 17));
                j["max_difference"] = json::parse(format_value(
                    std::max({std::abs(ct - cc), std::abs(ct - cp), std::abs(cc - cp)}), 3));
                std::printf("%s\n", j.dump().c_str());
            } else {
                const double c = epr::correlation_planar(e_x, e_psi, e_vs, e_phi, e_theta);
                std::printf("%s\n", format_value(c, digits).c_str());
            }
        }

        if (*scan_cmd || *chsh_scan) {
            if (!(s_lo < s_hi))
                throw CLI::ValidationError("--x-lo/--x-hi", "grid start must be below grid end");
        }

        if (*scan_cmd) {
            if (s_figure != 0) {
                const FigurePreset f = figure_preset(s_figure);
                if (f.chsh) throw CLI::ValidationError("--figure", "scan takes figure 2 or 3");
                s_psi = f.psi;
                s_vs = f.varsigma1;
                s_phi = f.phi1;
                s_theta = f.theta1;
            } else {
                s_psi = rad(s_psi);
                s_vs = rad(s_vs);
                s_phi = rad(s_phi);
                s_theta = rad(s_theta);
            }
            const auto r = epr::scan(
                [&](double x) { return epr::correlation_planar(x, s_psi, s_vs, s_phi, s_theta); },
                s_lo, s_hi, s_n);
            emit_scan(r, s_summary, digits);
        }

        if (*chsh_scan) {
            if (s_figure != 0) {
                const FigurePreset f = figure_preset(s_figure);
                if (!f.chsh) throw CLI::ValidationError("--figure", "chsh-scan takes figure 4, 5 or 6");
                s_psi = f.psi;
                cs = {f.varsigma1, f.phi1, f.theta1, f.varsigma2, f.phi2, f.theta2};
            } else {
                s_psi = rad(s_psi);
                cs.varsigma1 = rad(cs.varsigma1);
                cs.phi1 = rad(cs.phi1);
                cs.theta1 = rad(cs.theta1);
                cs.varsigma2 = rad(cs.varsigma2);
                cs.phi2 = rad(cs.phi2);
                cs.theta2 = rad(cs.theta2);
            }
            const auto r =
                epr::scan([&](double x) { return epr::chsh_lhs(x, s_psi, cs); }, s_lo, s_hi, s_n);
            emit_scan(r, s_summary, digits);
        }

        if (*chsh_max) {
            std::function<double(const epr::ChshSettings&)> objective;
            if (m_cm) {
                objective = [](const epr::ChshSettings& s) { return epr::chsh_lhs_cm(s); };
            } else {
                const double x = m_x;
                const double psi = rad(m_psi);
                objective = [x, psi](const epr::ChshSettings& s) {
                    return epr::chsh_lhs(x, psi, s);
                };
            }
            const epr::MaximizeResult r = epr::maximize_settings(objective, m_starts, m_tol, m_seed);
            json j;
            j["value"] = json::parse(format_value(r.value, digits));
            j["settings"] = {{"sigma1", json::parse(format_value(r.settings.varsigma1, digits))},
                             {"phi1", json::parse(format_value(r.settings.phi1, digits))},
                             {"theta1", json::parse(format_value(r.settings.theta1, digits))},
                             {"sigma2", json::parse(format_value(r.settings.varsigma2, digits))},
                             {"phi2", json::parse(format_value(r.settings.phi2, digits))},
                             {"theta2", json::parse(format_value(r.settings.theta2, digits))}};
            j["starts"] = r.starts;
            j["seed"] = r.seed;
            j["best_start"] = r.best_start;
            std::printf("%s\n", j.dump().c_str());
        }

        if (*selftest) {
            const auto results = epr::selftest::run_selftests(
                st_corrupt ? epr::selftest::Fault::corrupt_gamma2 : epr::selftest::Fault::none);
            json checks = json::array();
            for (const auto& r : results) {
                json c = {{"name", r.name},
                          {"tolerance", r.tolerance},
                          {"residual", json::parse(format_value(r.residual, 6))},
                          {"pass", r.pass}};
                if (!r.note.empty()) c["note"] = r.note;
                checks.push_back(c);
            }
            const bool ok = epr::selftest::all_passed(results);
            json j = {{"checks", checks},
                      {"total", results.size()},
                      {"all_passed", ok}};
            std::printf("%s\n", j.dump(2).c_str());
            if (!ok) return 3;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "invalid physics input: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
