#pragma once

#include "eprcorr/matrices.hpp"
#include "eprcorr/minkowski.hpp"

namespace epr {

/// Covariant photon polarization amplitude
///   e_lambda(k) = (1/sqrt2) R_{n_k} (0, -1, i lambda, 0)^T
/// for lightlike k with k0 > 0 and helicity lambda = +-1. The gauge fixed by
/// R_{n_k} (time block identity) makes the time component vanish; the
/// amplitude is transverse (k.e = 0) and normalized (e*.e = -1).
/// a_k must be a unit vector orthogonal to the propagation direction.
ComplexFourVector polarization_amplitude(const FourVector& k, int helicity,
                                         const ThreeDirection& a_k);

struct LinearPolarizationPair {
    ThreeVector eps;       // eps_theta
    ThreeVector eps_perp;  // eps_{theta + pi/2}
};

/// Linear polarization vectors eps_theta = (1/sqrt2) sum_lambda e_lambda e^{-i lambda theta}
/// and the perpendicular partner. Both come out real; the overall sign is a
/// convention and every downstream use is quadratic in them.
LinearPolarizationPair linear_polarization_pair(const FourVector& k, double theta,
                                                const ThreeDirection& a_k);

using FieldStrength = Matrix<4, 4>;  // f^{mu nu}, antisymmetric

/// Field-strength amplitude f^{mu nu}_lambda(k) = k^mu e^nu - k^nu e^mu.
FieldStrength field_strength(const FourVector& k, int helicity, const ThreeDirection& a_k);

/// Bob's polarization observable in the helicity basis {+1,-1}:
/// entries (1 - lambda lambda')/2 e^{i(lambda'-lambda) theta}; zero diagonal,
/// off-diagonals e^{-+2i theta}. Squares to the identity.
SpinorMatrix polarization_observable(double theta);

}  // namespace epr
