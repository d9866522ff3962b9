#include "eprcorr/correlation.hpp"

#include <stdexcept>

#include "eprcorr/dirac.hpp"
#include "eprcorr/photon.hpp"

namespace epr {

ThreeDirection alice_direction(double varsigma, double phi) {
    return ThreeDirection::normalized(ThreeVector{
        std::cos(varsigma), std::sin(varsigma) * std::sin(phi), std::sin(varsigma) * std::cos(phi)});
}

std::pair<double, double> alice_angles(const ThreeDirection& a) {
    const double varsigma = std::acos(std::clamp(a.x(), -1.0, 1.0));
    const double phi = std::atan2(a.y(), a.z());
    return {varsigma, phi};
}

double correlation_trace(const DecayKinematics& kin, const BlochVector& xi,
                         const MeasurementSettings& s, const ThreeDirection& a_k, bool primed) {
    using cd = std::complex<double>;
    constexpr cd I{0.0, 1.0};

    const BispinorMatrix rho = parent_density(kin, xi);
    const BispinorMatrix spin = spin_projection_bilinear(kin.p(), kin.fermion_mass(), s.a);
    const BispinorAmplitude v = v_amplitude(kin.p(), kin.fermion_mass());
    const BispinorMatrix vvbar = v * dirac_adjoint(v);

    // <Psi| 2 a.S x S(theta) |Psi> / <Psi|Psi>, both as traces against rho.
    // Bob's observable maps helicity lambda to -lambda with weight
    // e^{-2 i lambda theta}; the bra side carries Btilde_lambda = Bbar_{-lambda}.
    cd num{};
    cd den{};
    for (const int lambda : {+1, -1}) {
        const BispinorMatrix b = hybrid_vertex(kin, lambda, a_k);
        const BispinorMatrix bt = hybrid_vertex_tilde(kin, lambda, a_k);
        const BispinorMatrix bt_opp = hybrid_vertex_tilde(kin, -lambda, a_k);
        num += std::exp(-2.0 * I * double(lambda) * s.theta) * (b * spin * bt * rho).trace();
        den += (b * vvbar * bt_opp * rho).trace();
    }

    if (std::abs(den.imag()) > 1e-10 * std::abs(den.real()) || den.real() <= 0.0)
        throw std::logic_error("correlation_trace: state norm not real positive");
    const double c = num.real() / den.real();
    if (std::abs(num.imag() / den.real()) > 1e-10 * (1.0 + std::abs(c)))
        throw std::logic_error("correlation_trace: imaginary residue exceeds tolerance");
    return primed ? -c : c;
}

ThreeVector alpha_vector(const DecayKinematics& kin, const BlochVector& xi) {
    const double M = kin.parent_mass();
    const double kp = kin.kp();
    const ThreeVector kv = kin.k().spatial();
    const ThreeVector pv = kin.p().spatial();
    const double k0 = kin.k().t;
    const double p0 = kin.p().t;
    return kp * (M + p0 + k0) * xi.vec() +
           ((M + p0) * dot(kv, xi.vec()) - k0 * dot(pv, xi.vec())) * pv;
}

ThreeVector beta_vector(const DecayKinematics& kin, const ThreeDirection& a) {
    const double kp = kin.kp();
    const ThreeVector kv = kin.k().spatial();
    const ThreeVector pv = kin.p().spatial();
    const double k0 = kin.k().t;
    const double p0 = kin.p().t;
    const double m = kin.fermion_mass();
    return kp * a.vec() + (dot(a.vec(), kv) - k0 * dot(a.vec(), pv) / (m + p0)) * pv;
}

double correlation_closed(const DecayKinematics& kin, const BlochVector& xi,
                          const MeasurementSettings& s, const ThreeDirection& a_k, bool primed) {
    const ThreeVector alpha = alpha_vector(kin, xi);
    const ThreeVector beta = beta_vector(kin, s.a);
    const LinearPolarizationPair eps = linear_polarization_pair(kin.k(), s.theta, a_k);
    const double kp = kin.kp();
    const double denom = kp * kp * (kin.parent_mass() + kin.k().t + kin.p().t);
    const double c = (dot(alpha, eps.eps) * dot(beta, eps.eps) -
                      dot(alpha, eps.eps_perp) * dot(beta, eps.eps_perp)) /
                     denom;
    return primed ? -c : c;
}

double correlation_cm(const BlochVector& xi, const MeasurementSettings& s,
                      const ThreeDirection& n_k, const ThreeDirection& a_k) {
    const FourVector k{1.0, n_k.x(), n_k.y(), n_k.z()};
    const LinearPolarizationPair eps = linear_polarization_pair(k, s.theta, a_k);
    return dot(s.a.vec(), eps.eps) * dot(xi.vec(), eps.eps) -
           dot(s.a.vec(), eps.eps_perp) * dot(xi.vec(), eps.eps_perp);
}

double correlation_planar(double x, double psi, double varsigma, double phi, double theta) {
    if (x < 0.0) throw std::domain_error("correlation_planar: x must be non-negative");
    const double sx = std::sqrt(x);
    const double sx1 = std::sqrt(x + 1.0);
    const double first = std::sin(varsigma) * std::cos(phi - 2.0 * theta);
    const double momentum_factor = sx / (sx1 - sx * std::cos(psi));
    const double inner =
        std::cos(varsigma) -
        sx / (sx1 + 1.0) *
            (std::cos(varsigma) * std::cos(psi) + std::sin(varsigma) * std::sin(psi) * std::sin(phi));
    return first + momentum_factor * inner * std::sin(psi) * std::sin(2.0 * theta);
}

double correlation_ultrarel(double varsigma, double phi, double psi, double theta) {
    return std::sin(varsigma) * std::cos(phi) * std::cos(2.0 * theta) +
           std::sin(2.0 * theta) *
               (std::cos(varsigma) * std::sin(psi) - std::sin(varsigma) * std::cos(psi) * std::sin(phi));
}

double correlation_nonrel_limit(double varsigma, double phi, double theta) {
    return std::sin(varsigma) * std::cos(phi - 2.0 * theta);
}

}  // namespace epr
