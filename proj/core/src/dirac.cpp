#include "eprcorr/dirac.hpp"

#include <algorithm>
#include <stdexcept>

namespace epr {

namespace {

using cd = std::complex<double>;
constexpr cd I{0.0, 1.0};

SpinorMatrix make_pauli(int i) {
    SpinorMatrix s;
    switch (i) {
        case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
        case 2: s(0, 1) = -I;  s(1, 0) = I;   break;
        default: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
    }
    return s;
}

// chiral blocks: gamma^0 = offdiag(1,1), gamma^i = offdiag(-sigma_i, sigma_i)
BispinorMatrix from_blocks(const SpinorMatrix& tl, const SpinorMatrix& tr, const SpinorMatrix& bl,
                           const SpinorMatrix& br) {
    BispinorMatrix g;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            g(r, c) = tl(r, c);
            g(r, c + 2) = tr(r, c);
            g(r + 2, c) = bl(r, c);
            g(r + 2, c + 2) = br(r, c);
        }
    return g;
}

BispinorMatrix make_gamma(int mu) {
    const SpinorMatrix id2 = SpinorMatrix::identity();
    const SpinorMatrix z{};
    if (mu == 0) return from_blocks(z, id2, id2, z);
    const SpinorMatrix s = make_pauli(mu);
    return from_blocks(z, -s, s, z);
}

}  // namespace

const SpinorMatrix& pauli(int i) {
    if (i < 1 || i > 3) throw std::out_of_range("pauli: index must be in 1..3");
    static const SpinorMatrix s[3] = {make_pauli(1), make_pauli(2), make_pauli(3)};
    return s[i - 1];
}

SpinorMatrix pauli_dot(const ThreeVector& n) {
    return n.x * pauli(1) + n.y * pauli(2) + n.z * pauli(3);
}

const BispinorMatrix& gamma(int mu) {
    if (mu < 0 || mu > 3) throw std::out_of_range("gamma: index must be in 0..3");
    static const BispinorMatrix g[4] = {make_gamma(0), make_gamma(1), make_gamma(2), make_gamma(3)};
    return g[mu];
}

const BispinorMatrix& gamma5() {
    static const BispinorMatrix g5 =
        from_blocks(SpinorMatrix::identity(), SpinorMatrix{}, SpinorMatrix{},
                    -SpinorMatrix::identity());
    return g5;
}

BispinorMatrix slash(const FourVector& p) {
    return p.t * gamma(0) - p.x * gamma(1) - p.y * gamma(2) - p.z * gamma(3);
}

BispinorAmplitude v_amplitude(const FourVector& p, double m) {
    if (m <= 0.0) throw std::domain_error("v_amplitude: mass must be positive");
    if (p.t <= 0.0) throw std::domain_error("v_amplitude: p0 must be positive");
    const double scale = std::max({std::abs(p.t), std::abs(p.x), std::abs(p.y), std::abs(p.z)});
    if (std::abs(minkowski_dot(p, p) - m * m) > 1e-10 * scale * scale)
        throw std::domain_error("v_amplitude: momentum off shell");

    // (1 + p^mu sigma_mu / m) sigma_2 over (1 + (p^pi)^mu sigma_mu / m) sigma_2
    const SpinorMatrix id2 = SpinorMatrix::identity();
    const SpinorMatrix ps = pauli_dot(p.spatial());
    const SpinorMatrix upper = ((1.0 + p.t / m) * id2 + (1.0 / m) * ps) * pauli(2);
    const SpinorMatrix lower = ((1.0 + p.t / m) * id2 - (1.0 / m) * ps) * pauli(2);
    const double pref = 1.0 / (2.0 * std::sqrt(1.0 + p.t / m));

    BispinorAmplitude v;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            v(r, c) = pref * upper(r, c);
            v(r + 2, c) = pref * lower(r, c);
        }
    return v;
}

Matrix<2, 4> dirac_adjoint(const BispinorAmplitude& v) { return v.adjoint() * gamma(0); }

BispinorMatrix dirac_adjoint(const BispinorMatrix& m) { return gamma(0) * m.adjoint() * gamma(0); }

BispinorMatrix spin_projection_bilinear(const FourVector& p, double m, const ThreeDirection& a) {
    const BispinorAmplitude v = v_amplitude(p, m);
    const SpinorMatrix asig_t = pauli_dot(a.vec()).transpose();
    const BispinorMatrix direct = v * asig_t * dirac_adjoint(v);

    // printed closed form, four gamma-structure terms
    const ThreeVector av = a.vec();
    const ThreeVector pv = p.spatial();
    const double ap = dot(av, pv);
    const ThreeVector axp = cross(av, pv);
    const ThreeVector c1 = m * av + (ap / (m + p.t)) * pv;          // - c1.gamma gamma5
    const ThreeVector c4 = p.t * av - (ap / (m + p.t)) * pv;        // + c4.gamma gamma0 gamma5
    auto vec_gamma = [](const ThreeVector& u) {
        return u.x * gamma(1) + u.y * gamma(2) + u.z * gamma(3);
    };
    const BispinorMatrix closed =
        (1.0 / (2.0 * m)) *
        (-(vec_gamma(c1) * gamma5()) + ap * (gamma(0) * gamma5()) -
         std::complex<double>(0.0, 1.0) * (vec_gamma(axp) * gamma(0)) +
         vec_gamma(c4) * gamma(0) * gamma5());

    if (max_abs_diff(direct, closed) > 1e-12)
        throw std::logic_error("spin_projection_bilinear: closed form disagrees with direct product");
    return direct;
}

BispinorMatrix bispinor_rep(RepKind kind, const ThreeDirection& n, double angle_or_rapidity) {
    const SpinorMatrix ns = pauli_dot(n.vec());
    const SpinorMatrix id2 = SpinorMatrix::identity();
    if (kind == RepKind::rotation) {
        const SpinorMatrix u = su2_rotation(n, angle_or_rapidity);
        BispinorMatrix d;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                d(r, c) = u(r, c);
                d(r + 2, c + 2) = u(r, c);
            }
        return d;
    }
    const double ch = std::cosh(0.5 * angle_or_rapidity);
    const double sh = std::sinh(0.5 * angle_or_rapidity);
    const SpinorMatrix up = ch * id2 + sh * ns;  // D^(1/2,0) block
    const SpinorMatrix dn = ch * id2 - sh * ns;  // D^(0,1/2) block
    BispinorMatrix d;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            d(r, c) = up(r, c);
            d(r + 2, c + 2) = dn(r, c);
        }
    return d;
}

SpinorMatrix su2_rotation(const ThreeDirection& n, double angle) {
    const std::complex<double> I{0.0, 1.0};
    return std::cos(0.5 * angle) * SpinorMatrix::identity() -
           I * std::sin(0.5 * angle) * pauli_dot(n.vec());
}

SpinorMatrix su2_of_rotation(const LorentzTransform& r) {
    // spatial block must be a rotation; time row/column identity is the
    // caller's concern (wigner_rotation guarantees it)
    const double tr = r(1, 1) + r(2, 2) + r(3, 3);
    const double c = std::clamp(0.5 * (tr - 1.0), -1.0, 1.0);
    const double angle = std::acos(c);
    if (angle < 1e-14) return SpinorMatrix::identity();

    ThreeVector axis;
    const double s = std::sin(angle);
    if (s > 1e-6) {
        axis = {(r(3, 2) - r(2, 3)) / (2.0 * s), (r(1, 3) - r(3, 1)) / (2.0 * s),
                (r(2, 1) - r(1, 2)) / (2.0 * s)};
    } else {
        // angle ~ pi: axis from (R + 1)/2 = n n^T; largest-magnitude
        // component made positive for determinism
        double b[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                b[i][j] = 0.5 * (r(i + 1, j + 1) + ((i == j) ? 1.0 : 0.0));
        int col = 0;
        for (int j = 1; j < 3; ++j)
            if (b[j][j] > b[col][col]) col = j;
        axis = {b[0][col], b[1][col], b[2][col]};
        const double n = axis.norm();
        axis = axis * (1.0 / n);
        double best = axis.x;
        if (std::abs(axis.y) > std::abs(best)) best = axis.y;
        if (std::abs(axis.z) > std::abs(best)) best = axis.z;
        if (best < 0.0) axis = -axis;
    }
    return su2_rotation(ThreeDirection::normalized(axis), angle);
}

}  // namespace epr
