#pragma once

#include <utility>

#include "eprcorr/decay.hpp"
#include "eprcorr/minkowski.hpp"

namespace epr {

/// Alice measures the fermion spin projection on a (unit), Bob the photon
/// linear polarization at angle theta. a is parametrized as
/// a = (cos varsigma, sin varsigma sin phi, sin varsigma cos phi).
struct MeasurementSettings {
    ThreeDirection a;
    double theta = 0.0;
};

/// a(varsigma, phi) = (cos varsigma, sin varsigma sin phi, sin varsigma cos phi).
ThreeDirection alice_direction(double varsigma, double phi);

/// Inverse of alice_direction for varsigma in [0, pi]; returns {varsigma, phi}.
std::pair<double, double> alice_angles(const ThreeDirection& a);

/// Correlation function by the gamma-trace route: the expectation
/// <Psi| 2 a.S x S(theta) |Psi> / <Psi|Psi> evaluated with the hybrid vertex
/// brackets, the parent density matrix and the spin bilinear. The helicity
/// sum is real analytically; the imaginary residue is checked and dropped.
/// The primed state family flips the overall sign.
double correlation_trace(const DecayKinematics& kin, const BlochVector& xi,
                         const MeasurementSettings& s, const ThreeDirection& a_k,
                         bool primed = false);

/// alpha = (kp)(M + p0 + k0) xi + [(M + p0)(k.xi) - k0 (p.xi)] p
ThreeVector alpha_vector(const DecayKinematics& kin, const BlochVector& xi);

/// beta = (kp) a + [(a.k) - k0 (a.p)/(m + p0)] p
ThreeVector beta_vector(const DecayKinematics& kin, const ThreeDirection& a);

/// Closed form of the correlation function:
///   C = [(alpha.eps_theta)(beta.eps_theta) - (alpha.eps_perp)(beta.eps_perp)]
///       / [(kp)^2 (M + k0 + p0)].
double correlation_closed(const DecayKinematics& kin, const BlochVector& xi,
                          const MeasurementSettings& s, const ThreeDirection& a_k,
                          bool primed = false);

/// Center-of-mass form, independent of the particle momenta:
///   C = (a.eps_theta)(xi.eps_theta) - (a.eps_perp)(xi.eps_perp).
double correlation_cm(const BlochVector& xi, const MeasurementSettings& s,
                      const ThreeDirection& n_k, const ThreeDirection& a_k);

/// Parametrized planar form (photon along x, xi = z, fermion momentum at
/// angle psi in the xy plane), x = (|p|/m)^2:
///   C = sin(vs) cos(phi - 2 theta)
///     + sqrt(x)/(sqrt(x+1) - sqrt(x) cos psi)
///       [cos(vs) - sqrt(x)/(sqrt(x+1)+1) (cos(vs) cos psi + sin(vs) sin psi sin phi)]
///       sin psi sin(2 theta).
double correlation_planar(double x, double psi, double varsigma, double phi, double theta);

/// x -> infinity limit of the planar form.
double correlation_ultrarel(double varsigma, double phi, double psi, double theta);

/// x -> 0 limit: sin(varsigma) cos(phi - 2 theta).
double correlation_nonrel_limit(double varsigma, double phi, double theta);

}  // namespace epr
