#pragma once

#include "eprcorr/matrices.hpp"
#include "eprcorr/minkowski.hpp"

namespace epr {

/// Pauli matrix sigma_i, i in {1,2,3}.
const SpinorMatrix& pauli(int i);

/// n.sigma for a real 3-vector.
SpinorMatrix pauli_dot(const ThreeVector& n);

/// Dirac matrix gamma^mu in the chiral representation:
/// gamma^0 off-diagonal identity blocks, spatial gammas off-diagonal -+sigma,
/// gamma^5 = diag(1,1,-1,-1).
const BispinorMatrix& gamma(int mu);
const BispinorMatrix& gamma5();

/// Feynman slash p_mu gamma^mu = p0 gamma^0 - p.gamma.
BispinorMatrix slash(const FourVector& p);

// template so that braced-list calls resolve to the real overload above
template <class V>
    requires std::same_as<V, ComplexFourVector>
BispinorMatrix slash(const V& p) {
    return p.t * gamma(0) - p.x * gamma(1) - p.y * gamma(2) - p.z * gamma(3);
}

/// Covariant bispinor amplitude v(p) for an on-shell momentum, stacked
/// chiral blocks (1 + p^mu sigma_mu / m) sigma_2 and the parity-flipped
/// twin, normalized so that vbar v = 1.
BispinorAmplitude v_amplitude(const FourVector& p, double m);

/// Dirac conjugation: vbar = v^dagger gamma^0, Abar = gamma^0 A^dagger gamma^0.
Matrix<2, 4> dirac_adjoint(const BispinorAmplitude& v);
BispinorMatrix dirac_adjoint(const BispinorMatrix& m);

/// Alice-side spin bilinear v(p) (a.sigma)^T vbar(p), computed as a direct
/// matrix product. The closed four-term gamma form is evaluated alongside
/// as a consistency check; the two must agree to 1e-12.
BispinorMatrix spin_projection_bilinear(const FourVector& p, double m, const ThreeDirection& a);

enum class RepKind { rotation, boost };

/// Block-diagonal D^(1/2,0) + D^(0,1/2) image of a rotation (angle) or a
/// boost (rapidity) about/along the unit axis n. Rotations act as
/// exp(-i angle/2 n.sigma) on both blocks; boosts as exp(+-chi/2 n.sigma)
/// on the two chiral blocks.
BispinorMatrix bispinor_rep(RepKind kind, const ThreeDirection& n, double angle_or_rapidity);

/// SU(2) element exp(-i angle/2 n.sigma).
SpinorMatrix su2_rotation(const ThreeDirection& n, double angle);

/// SU(2) lift of a spatial rotation (e.g. a Wigner rotation) by axis-angle
/// extraction. Natural branch: angle in [0,pi]; at angle ~ pi the axis sign
/// is fixed by making its largest-magnitude component positive.
SpinorMatrix su2_of_rotation(const LorentzTransform& r);

}  // namespace epr
