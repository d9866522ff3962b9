#pragma once

#include <array>
#include <complex>

#include "eprcorr/decay.hpp"
#include "eprcorr/matrices.hpp"
#include "eprcorr/minkowski.hpp"

namespace epr::nonrel {

/// Total-spin-1/2 state of the spin-1/2 x spin-1 system, |psi> = alpha|up> + beta|dn>,
/// with the Bloch-vector dictionary |alpha|^2 = (1+xi3)/2, |beta|^2 = (1-xi3)/2,
/// alpha beta* = (xi1 - i xi2)/2.
struct HybridSpinState {
    std::complex<double> alpha{1.0};
    std::complex<double> beta{0.0};

    /// Pure state from a unit Bloch vector.
    static HybridSpinState from_bloch(const ThreeVector& xi);

    ThreeVector bloch() const;
};

/// Clebsch-Gordan expansions of the total-spin-1/2 states in the product
/// basis |sigma_f> x |sigma_b> ordered (+1/2,-1/2) x (1,0,-1), index 3 f + b:
///   |up> = sqrt(2/3)|-1/2,1> - sqrt(1/3)|1/2,0>
///   |dn> = sqrt(1/3)|-1/2,0> - sqrt(2/3)|1/2,-1>
std::array<double, 6> cg_up();
std::array<double, 6> cg_down();

/// Standard spin-1 representation of a spatial rotation, obtained by
/// conjugating the 3x3 block of R with the Condon-Shortley spherical basis
/// |1> = -(x+iy)/sqrt2, |0> = z, |-1> = (x-iy)/sqrt2. A homomorphism.
/// Throws std::invalid_argument if R is not a rotation (1e-10).
Spin1Matrix spin1_rotation(const LorentzTransform& r);

/// Helicity basis |n_k, lambda> for the boson, columns ordered (+1, 0, -1)
/// in the spin basis. Columns are the spin1_rotation image of
/// rotation_to_direction(n_k, a_k) with per-helicity phases (+1, -1, -1),
/// matching the phase convention of the printed x-axis expansions.
Spin1Matrix helicity_states(const ThreeDirection& n_k, const ThreeDirection& a_k);

/// Polarization observable S_theta = |eps_theta><eps_theta| - |eps_perp><eps_perp|
/// with |eps_theta> = (e^{i theta}|n_k,+1> + e^{-i theta}|n_k,-1>)/sqrt2.
/// Hermitian, traceless, eigenvalues {+1, 0, -1}.
Spin1Matrix polarization_observable(double theta, const ThreeDirection& n_k,
                                    const ThreeDirection& a_k);

/// Non-relativistic correlation <psi| 2 a.S x S_theta |psi> / <psi|psi>,
/// evaluated as a full operator expectation in the 6-dimensional product
/// space (density-matrix form, mixed xi allowed). In the standard
/// configuration n_k = x, a_k = z the closed form
///   (2/3)[(a3 xi3 - a2 xi2) cos 2theta + (a2 xi3 + a3 xi2) sin 2theta]
/// is evaluated alongside and must agree to 1e-12.
double correlation(const BlochVector& xi, const ThreeDirection& a, double theta,
                   const ThreeDirection& n_k, const ThreeDirection& a_k);

/// Closed form above (standard configuration only).
double correlation_closed_form(const BlochVector& xi, const ThreeDirection& a, double theta);

}  // namespace epr::nonrel
