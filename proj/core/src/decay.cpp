#include "eprcorr/decay.hpp"

#include <algorithm>
#include <stdexcept>

#include "eprcorr/dirac.hpp"
#include "eprcorr/photon.hpp"

namespace epr {

namespace {
double scale2(const FourVector& v) {
    const double m = std::max({std::abs(v.t), std::abs(v.x), std::abs(v.y), std::abs(v.z), 1e-300});
    return m * m;
}
}  // namespace

DecayKinematics::DecayKinematics(const FourVector& p, const FourVector& k, double fermion_mass)
    : p_(p), k_(k), q_(p + k), m_(fermion_mass) {
    if (m_ <= 0.0) throw std::domain_error("DecayKinematics: fermion mass must be positive");
    if (p_.t <= 0.0 || k_.t <= 0.0)
        throw std::domain_error("DecayKinematics: energies must be positive");
    if (std::abs(minkowski_dot(p_, p_) - m_ * m_) > 1e-10 * scale2(p_))
        throw std::domain_error("DecayKinematics: fermion momentum off shell");
    if (std::abs(minkowski_dot(k_, k_)) > 1e-10 * scale2(k_))
        throw std::domain_error("DecayKinematics: photon momentum not lightlike");
    const double M2 = minkowski_dot(q_, q_);
    if (M2 <= m_ * m_)
        throw std::domain_error("DecayKinematics: parent mass must exceed fermion mass");
    M_ = std::sqrt(M2);
}

ThreeDirection DecayKinematics::photon_direction() const {
    return ThreeDirection::normalized(k_.spatial());
}

DecayKinematics cm_kinematics(double parent_mass, double fermion_mass, const ThreeDirection& n_p) {
    if (!(parent_mass > fermion_mass) || fermion_mass <= 0.0)
        throw std::domain_error("cm_kinematics: need M > m > 0");
    const double M = parent_mass;
    const double m = fermion_mass;
    const double k0 = (M * M - m * m) / (2.0 * M);
    const double p0 = (M * M + m * m) / (2.0 * M);
    const ThreeVector pv = k0 * n_p.vec();  // |p| = k0 in the c.m. frame
    const FourVector p{p0, pv.x, pv.y, pv.z};
    const FourVector k{k0, -pv.x, -pv.y, -pv.z};
    return DecayKinematics(p, k, m);
}

DecayKinematics planar_kinematics(double m, double x, double psi, double k0) {
    if (m <= 0.0) throw std::domain_error("planar_kinematics: mass must be positive");
    if (x < 0.0) throw std::domain_error("planar_kinematics: x must be non-negative");
    if (k0 <= 0.0) throw std::domain_error("planar_kinematics: k0 must be positive");
    const double pmag = m * std::sqrt(x);
    const FourVector p{m * std::sqrt(x + 1.0), pmag * std::cos(psi), pmag * std::sin(psi), 0.0};
    const FourVector k{k0, k0, 0.0, 0.0};
    return DecayKinematics(p, k, m);
}

BlochVector::BlochVector(const ThreeVector& xi) : xi_(xi) {
    if (xi.norm() > 1.0 + 1e-12)
        throw std::domain_error("BlochVector: |xi| must not exceed 1");
}

FourVector pauli_lubanski_mean(const DecayKinematics& kin, const BlochVector& xi) {
    const double M = kin.parent_mass();
    const FourVector q = kin.q();
    const ThreeVector qv = q.spatial();
    const double qxi = dot(qv, xi.vec());
    const ThreeVector w = 0.5 * (M * xi.vec() + (qxi / (M + q.t)) * qv);
    return {0.5 * qxi, w.x, w.y, w.z};
}

BispinorMatrix parent_density(const DecayKinematics& kin, const BlochVector& xi) {
    const double M = kin.parent_mass();
    const FourVector w = pauli_lubanski_mean(kin, xi);
    const BispinorMatrix id = BispinorMatrix::identity();
    const BispinorMatrix qterm = id + (1.0 / M) * slash(kin.q());
    const BispinorMatrix wterm = id + (2.0 / M) * (gamma5() * slash(w));
    return 0.125 * (qterm * wterm * qterm);
}

namespace {
BispinorMatrix vertex_bracket(const DecayKinematics& kin, int helicity, const ThreeDirection& a_k,
                              double mass_coeff) {
    const ComplexFourVector e = polarization_amplitude(kin.k(), helicity, a_k);
    const double kp = kin.kp();
    const std::complex<double> ep = minkowski_dot(e, ComplexFourVector(kin.p()));
    const BispinorMatrix ks = slash(kin.k());
    const BispinorMatrix es = slash(e);
    return mass_coeff * (ks * es) + (2.0 * kp) * es - (2.0 * ep) * ks;
}
}  // namespace

BispinorMatrix hybrid_vertex(const DecayKinematics& kin, int helicity, const ThreeDirection& a_k,
                             bool primed) {
    const double m = kin.fermion_mass();
    const double M = kin.parent_mass();
    if (!primed) return vertex_bracket(kin, helicity, a_k, m + M);
    return gamma5() * vertex_bracket(kin, helicity, a_k, m - M);
}

BispinorMatrix hybrid_vertex_tilde(const DecayKinematics& kin, int helicity,
                                   const ThreeDirection& a_k) {
    return vertex_bracket(kin, helicity, a_k, -(kin.fermion_mass() + kin.parent_mass()));
}

}  // namespace epr
