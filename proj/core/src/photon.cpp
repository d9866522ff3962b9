#include "eprcorr/photon.hpp"

#include <algorithm>
#include <stdexcept>

namespace epr {

namespace {
constexpr std::complex<double> I{0.0, 1.0};

void require_lightlike(const FourVector& k) {
    if (k.t <= 0.0) throw std::domain_error("photon: k0 must be positive");
    if (std::abs(minkowski_dot(k, k)) > 1e-10 * k.t * k.t)
        throw std::domain_error("photon: k must be lightlike");
}

void require_helicity(int helicity) {
    if (helicity != 1 && helicity != -1)
        throw std::invalid_argument("photon: helicity must be +1 or -1");
}
}  // namespace

ComplexFourVector polarization_amplitude(const FourVector& k, int helicity,
                                         const ThreeDirection& a_k) {
    require_lightlike(k);
    require_helicity(helicity);
    const ThreeDirection n_k = ThreeDirection::normalized(k.spatial());
    const LorentzTransform r = rotation_to_direction(n_k, a_k);
    // (1/sqrt2) R (0, -1, i lambda, 0); time block is identity so e0 = 0
    const double pref = 1.0 / std::sqrt(2.0);
    ComplexFourVector e;
    e.t = 0.0;
    e.x = pref * (-r(1, 1) + I * double(helicity) * r(1, 2));
    e.y = pref * (-r(2, 1) + I * double(helicity) * r(2, 2));
    e.z = pref * (-r(3, 1) + I * double(helicity) * r(3, 2));
    return e;
}

LinearPolarizationPair linear_polarization_pair(const FourVector& k, double theta,
                                                const ThreeDirection& a_k) {
    const ComplexFourVector ep = polarization_amplitude(k, +1, a_k);
    const ComplexFourVector em = polarization_amplitude(k, -1, a_k);
    const std::complex<double> fp = std::exp(-I * theta);
    const std::complex<double> fm = std::exp(I * theta);
    const double pref = 1.0 / std::sqrt(2.0);

    ComplexFourVector e = {0.0, pref * (ep.x * fp + em.x * fm), pref * (ep.y * fp + em.y * fm),
                           pref * (ep.z * fp + em.z * fm)};
    ComplexFourVector eperp = {0.0, -I * pref * (ep.x * fp - em.x * fm),
                               -I * pref * (ep.y * fp - em.y * fm),
                               -I * pref * (ep.z * fp - em.z * fm)};

    const double im = std::max({std::abs(e.x.imag()), std::abs(e.y.imag()), std::abs(e.z.imag()),
                                std::abs(eperp.x.imag()), std::abs(eperp.y.imag()),
                                std::abs(eperp.z.imag())});
    if (im > 1e-12)
        throw std::logic_error("linear_polarization_pair: nonvanishing imaginary part");

    return {{e.x.real(), e.y.real(), e.z.real()},
            {eperp.x.real(), eperp.y.real(), eperp.z.real()}};
}

FieldStrength field_strength(const FourVector& k, int helicity, const ThreeDirection& a_k) {
    const ComplexFourVector e = polarization_amplitude(k, helicity, a_k);
    FieldStrength f;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) f(mu, nu) = k[mu] * e[nu] - k[nu] * e[mu];
    return f;
}

SpinorMatrix polarization_observable(double theta) {
    // basis order (+1, -1); S|k,lambda> = sum_{lambda'} M_{lambda' lambda} |k,lambda'>
    SpinorMatrix m;
    m(0, 1) = std::exp(2.0 * I * theta);   // lambda' = +1, lambda = -1
    m(1, 0) = std::exp(-2.0 * I * theta);  // lambda' = -1, lambda = +1
    return m;
}

}  // namespace epr
