#include "eprcorr/nonrel.hpp"

#include <stdexcept>

#include "eprcorr/dirac.hpp"

namespace epr::nonrel {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;

// Condon-Shortley spherical basis as Cartesian columns (+1, 0, -1)
const Spin1Matrix& cs_basis() {
    static const Spin1Matrix u = [] {
        const double r = 1.0 / std::sqrt(2.0);
        Spin1Matrix m;
        m(0, 0) = -r;     m(0, 1) = 0.0; m(0, 2) = r;
        m(1, 0) = -I * r; m(1, 1) = 0.0; m(1, 2) = -I * r;
        m(2, 0) = 0.0;    m(2, 1) = 1.0; m(2, 2) = 0.0;
        return m;
    }();
    return u;
}

Matrix<6, 1> to_column(const std::array<double, 6>& v) {
    Matrix<6, 1> c;
    for (int i = 0; i < 6; ++i) c(i, 0) = v[size_t(i)];
    return c;
}

bool near_standard_config(const ThreeDirection& n_k, const ThreeDirection& a_k) {
    return std::abs(n_k.x() - 1.0) < 1e-14 && std::abs(n_k.y()) < 1e-14 &&
           std::abs(n_k.z()) < 1e-14 && std::abs(a_k.x()) < 1e-14 && std::abs(a_k.y()) < 1e-14 &&
           std::abs(a_k.z() - 1.0) < 1e-14;
}

}  // namespace

HybridSpinState HybridSpinState::from_bloch(const ThreeVector& xi) {
    if (std::abs(xi.norm() - 1.0) > 1e-12)
        throw std::domain_error("HybridSpinState: pure state needs |xi| = 1");
    HybridSpinState s;
    const double am = std::sqrt(0.5 * (1.0 + xi.z));
    const double bm = std::sqrt(0.5 * (1.0 - xi.z));
    s.alpha = am;
    // phase convention: alpha real non-negative, alpha beta* = (xi1 - i xi2)/2
    if (am > 1e-15)
        s.beta = std::conj(cd(xi.x, -xi.y) / (2.0 * am));
    else
        s.beta = bm;
    return s;
}

ThreeVector HybridSpinState::bloch() const {
    const cd ab = alpha * std::conj(beta);
    return {2.0 * ab.real(), -2.0 * ab.imag(), std::norm(alpha) - std::norm(beta)};
}

std::array<double, 6> cg_up() {
    const double a = std::sqrt(2.0 / 3.0);
    const double b = std::sqrt(1.0 / 3.0);
    // |up> = a |-1/2>|1> - b |1/2>|0>
    return {0.0, -b, 0.0, a, 0.0, 0.0};
}

std::array<double, 6> cg_down() {
    const double a = std::sqrt(2.0 / 3.0);
    const double b = std::sqrt(1.0 / 3.0);
    // |dn> = b |-1/2>|0> - a |1/2>|-1>
    return {0.0, 0.0, -a, 0.0, b, 0.0};
}

Spin1Matrix spin1_rotation(const LorentzTransform& r) {
    // validate the spatial block is in SO(3)
    double ortho = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += r(k + 1, i + 1) * r(k + 1, j + 1);
            ortho = std::max(ortho, std::abs(s - ((i == j) ? 1.0 : 0.0)));
        }
    const double det =
        r(1, 1) * (r(2, 2) * r(3, 3) - r(2, 3) * r(3, 2)) -
        r(1, 2) * (r(2, 1) * r(3, 3) - r(2, 3) * r(3, 1)) +
        r(1, 3) * (r(2, 1) * r(3, 2) - r(2, 2) * r(3, 1));
    if (ortho > 1e-10 || std::abs(det - 1.0) > 1e-10)
        throw std::invalid_argument("spin1_rotation: input is not a rotation");

    Spin1Matrix r3;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r3(i, j) = r(i + 1, j + 1);
    const Spin1Matrix& u = cs_basis();
    return u.adjoint() * r3 * u;
}

Spin1Matrix helicity_states(const ThreeDirection& n_k, const ThreeDirection& a_k) {
    const Spin1Matrix d = spin1_rotation(rotation_to_direction(n_k, a_k));
    // per-helicity phases (+1, -1, -1) relative to the D^(1) columns;
    // only the lambda = +-1 relative sign is observable downstream
    Spin1Matrix h;
    const double sign[3] = {1.0, -1.0, -1.0};
    for (int s = 0; s < 3; ++s)
        for (int lam = 0; lam < 3; ++lam) h(s, lam) = sign[lam] * d(s, lam);
    return h;
}

Spin1Matrix polarization_observable(double theta, const ThreeDirection& n_k,
                                    const ThreeDirection& a_k) {
    const Spin1Matrix h = helicity_states(n_k, a_k);
    auto eps_state = [&](double th) {
        Matrix<3, 1> e;
        const cd fp = std::exp(I * th) / std::sqrt(2.0);
        const cd fm = std::exp(-I * th) / std::sqrt(2.0);
        for (int s = 0; s < 3; ++s) e(s, 0) = fp * h(s, 0) + fm * h(s, 2);
        return e;
    };
    const Matrix<3, 1> e = eps_state(theta);
    const Matrix<3, 1> ep = eps_state(theta + 0.5 * kPi);
    return e * e.adjoint() - ep * ep.adjoint();
}

double correlation(const BlochVector& xi, const ThreeDirection& a, double theta,
                   const ThreeDirection& n_k, const ThreeDirection& a_k) {
    const Matrix<6, 1> up = to_column(cg_up());
    const Matrix<6, 1> dn = to_column(cg_down());

    // density matrix of alpha|up> + beta|dn> in Bloch form; mixed xi allowed
    const ThreeVector x = xi.vec();
    const Matrix<6, 6> rho =
        0.5 * ((up * up.adjoint() + dn * dn.adjoint()) +
               x.x * (dn * up.adjoint() + up * dn.adjoint()) +
               I * x.y * (dn * up.adjoint() - up * dn.adjoint()) +
               x.z * (up * up.adjoint() - dn * dn.adjoint()));

    const Spin1Matrix stheta = polarization_observable(theta, n_k, a_k);
    const SpinorMatrix asig = pauli_dot(a.vec());  // 2 a.S on the fermion factor

    Matrix<6, 6> obs;
    for (int f1 = 0; f1 < 2; ++f1)
        for (int b1 = 0; b1 < 3; ++b1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int b2 = 0; b2 < 3; ++b2)
                    obs(3 * f1 + b1, 3 * f2 + b2) = asig(f1, f2) * stheta(b1, b2);

    const cd value = (rho * obs).trace();
    if (std::abs(value.imag()) > 1e-12)
        throw std::logic_error("nonrel::correlation: expectation not real");

    if (near_standard_config(n_k, a_k)) {
        const double closed = correlation_closed_form(xi, a, theta);
        if (std::abs(value.real() - closed) > 1e-12)
            throw std::logic_error("nonrel::correlation: closed form disagrees with expectation");
    }
    return value.real();
}

double correlation_closed_form(const BlochVector& xi, const ThreeDirection& a, double theta) {
    const ThreeVector x = xi.vec();
    return (2.0 / 3.0) * ((a.z() * x.z - a.y() * x.y) * std::cos(2.0 * theta) +
                          (a.y() * x.z + a.z() * x.y) * std::sin(2.0 * theta));
}

}  // namespace epr::nonrel
