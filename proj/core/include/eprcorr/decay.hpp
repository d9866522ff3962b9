#pragma once

#include "eprcorr/matrices.hpp"
#include "eprcorr/minkowski.hpp"

namespace epr {

/// Validated two-body decay kinematics: parent q = p + k with mass M,
/// fermion p with mass m, lightlike photon k. Enforces on-shell conditions,
/// positive energies, M > m > 0, and consequently kp = (M^2 - m^2)/2.
class DecayKinematics {
  public:
    /// Builds from the final-state momenta; q and M are derived.
    /// Throws std::domain_error on off-shell or degenerate input.
    DecayKinematics(const FourVector& p, const FourVector& k, double fermion_mass);

    const FourVector& p() const { return p_; }
    const FourVector& k() const { return k_; }
    const FourVector& q() const { return q_; }
    double fermion_mass() const { return m_; }
    double parent_mass() const { return M_; }

    /// Minkowski product k.p = (M^2 - m^2)/2.
    double kp() const { return 0.5 * (M_ * M_ - m_ * m_); }

    /// Photon propagation direction k/|k|.
    ThreeDirection photon_direction() const;

  private:
    FourVector p_, k_, q_;
    double m_, M_;
};

/// Center-of-mass kinematics: q = (M,0,0,0), k0 = (M^2-m^2)/(2M),
/// p0 = (M^2+m^2)/(2M), fermion momentum along n_p, photon opposite.
DecayKinematics cm_kinematics(double parent_mass, double fermion_mass, const ThreeDirection& n_p);

/// Fig.-1 configuration: photon along the x axis with energy k0, fermion
/// momentum |p| = m sqrt(x) at angle psi in the xy plane, x = (|p|/m)^2.
/// The parent mass is derived from q = p + k; the correlation functions are
/// invariant under the choice of k0.
DecayKinematics planar_kinematics(double m, double x, double psi, double k0);

/// Parent polarization (Bloch) vector, |xi| <= 1 (mixed states allowed).
class BlochVector {
  public:
    BlochVector() = default;
    explicit BlochVector(const ThreeVector& xi);
    BlochVector(double x, double y, double z) : BlochVector(ThreeVector{x, y, z}) {}

    const ThreeVector& vec() const { return xi_; }

  private:
    ThreeVector xi_;
};

/// Mean Pauli-Lubanski four-vector of the parent state:
/// w0 = q.xi/2, w = (M xi + q (q.xi)/(M + q0))/2. Satisfies w.q = 0.
FourVector pauli_lubanski_mean(const DecayKinematics& kin, const BlochVector& xi);

/// Parent spin density matrix
///   rho = (1/8)(1 + q gamma / M)(1 + 2 gamma^5 w gamma / M)(1 + q gamma / M),
/// normalized to unit trace; satisfies slash(q) rho = M rho.
BispinorMatrix parent_density(const DecayKinematics& kin, const BlochVector& xi);

/// Decay vertex bracket of the hybrid state for helicity lambda:
///   B_lambda = (m+M)(k gamma)(e gamma) + 2(kp)(e gamma) - 2(e.p)(k gamma).
/// With `primed` set, the opposite-parity family gamma^5 [(m-M)(k gamma)(e gamma)
/// + 2(kp)(e gamma) - 2(e.p)(k gamma)] is built instead. Either family
/// satisfies slash(q) B v(p) = M B v(p).
BispinorMatrix hybrid_vertex(const DecayKinematics& kin, int helicity, const ThreeDirection& a_k,
                             bool primed = false);

/// Sign-variant bracket printed first in the correlation trace formula:
///   Btilde_lambda = -(m+M)(k gamma)(e gamma) + 2(kp)(e gamma) - 2(e.p)(k gamma);
/// equals the Dirac adjoint of B_{-lambda}.
BispinorMatrix hybrid_vertex_tilde(const DecayKinematics& kin, int helicity,
                                   const ThreeDirection& a_k);

}  // namespace epr
