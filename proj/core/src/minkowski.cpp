#include "eprcorr/minkowski.hpp"

#include <algorithm>
#include <stdexcept>

namespace epr {

namespace {
constexpr double kUnitTol = 1e-10;  // input validation tolerance

double scale2(const FourVector& v) {
    const double m = std::max({std::abs(v.t), std::abs(v.x), std::abs(v.y), std::abs(v.z), 1e-300});
    return m * m;
}
}  // namespace

ThreeDirection::ThreeDirection(const ThreeVector& v) : v_(v) {
    if (std::abs(v.norm() - 1.0) > kUnitTol)
        throw std::invalid_argument("ThreeDirection: vector is not unit length");
}

ThreeDirection ThreeDirection::normalized(const ThreeVector& v) {
    const double n = v.norm();
    if (n == 0.0) throw std::invalid_argument("ThreeDirection: cannot normalize zero vector");
    return ThreeDirection(ThreeVector{v.x / n, v.y / n, v.z / n});
}

LorentzTransform LorentzTransform::identity() {
    LorentzTransform l;
    for (int i = 0; i < 4; ++i) l(i, i) = 1.0;
    return l;
}

FourVector LorentzTransform::apply(const FourVector& v) const {
    FourVector r;
    r.t = (*this)(0, 0) * v.t + (*this)(0, 1) * v.x + (*this)(0, 2) * v.y + (*this)(0, 3) * v.z;
    r.x = (*this)(1, 0) * v.t + (*this)(1, 1) * v.x + (*this)(1, 2) * v.y + (*this)(1, 3) * v.z;
    r.y = (*this)(2, 0) * v.t + (*this)(2, 1) * v.x + (*this)(2, 2) * v.y + (*this)(2, 3) * v.z;
    r.z = (*this)(3, 0) * v.t + (*this)(3, 1) * v.x + (*this)(3, 2) * v.y + (*this)(3, 3) * v.z;
    return r;
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& o) const {
    LorentzTransform r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    return r;
}

LorentzTransform LorentzTransform::inverse() const {
    // eta Lambda^T eta
    LorentzTransform r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const double si = (i == 0) ? 1.0 : -1.0;
            const double sj = (j == 0) ? 1.0 : -1.0;
            r(i, j) = si * sj * (*this)(j, i);
        }
    return r;
}

double LorentzTransform::metric_residual() const {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0.0;
            for (int k = 0; k < 4; ++k) {
                const double ek = (k == 0) ? 1.0 : -1.0;
                s += (*this)(k, i) * ek * (*this)(k, j);
            }
            const double target = (i == j) ? ((i == 0) ? 1.0 : -1.0) : 0.0;
            worst = std::max(worst, std::abs(s - target));
        }
    return worst;
}

LorentzTransform rotation_to_direction(const ThreeDirection& n, const ThreeDirection& a) {
    if (std::abs(dot(n.vec(), a.vec())) > kUnitTol)
        throw std::invalid_argument("rotation_to_direction: a must be orthogonal to n");
    const ThreeVector b = cross(n.vec(), a.vec());
    LorentzTransform r;
    r(0, 0) = 1.0;
    // spatial columns (a, n x a, n)
    r(1, 1) = a.x(); r(2, 1) = a.y(); r(3, 1) = a.z();
    r(1, 2) = b.x;   r(2, 2) = b.y;   r(3, 2) = b.z;
    r(1, 3) = n.x(); r(2, 3) = n.y(); r(3, 3) = n.z();
    return r;
}

LorentzTransform rotation_about_axis(const ThreeDirection& n, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double k[3] = {n.x(), n.y(), n.z()};
    // Rodrigues: R = 1 + sin K + (1 - cos) K^2, K v = k x v
    const double K[3][3] = {{0.0, -k[2], k[1]}, {k[2], 0.0, -k[0]}, {-k[1], k[0], 0.0}};
    LorentzTransform r;
    r(0, 0) = 1.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double d = (i == j) ? 1.0 : 0.0;
            r(i + 1, j + 1) = d + s * K[i][j] + (1.0 - c) * (k[i] * k[j] - d);
        }
    return r;
}

LorentzTransform pure_boost(const ThreeDirection& n, double rapidity) {
    const double ch = std::cosh(rapidity);
    const double sh = std::sinh(rapidity);
    const double k[3] = {n.x(), n.y(), n.z()};
    LorentzTransform r;
    r(0, 0) = ch;
    for (int i = 0; i < 3; ++i) {
        r(0, i + 1) = sh * k[i];
        r(i + 1, 0) = sh * k[i];
        for (int j = 0; j < 3; ++j)
            r(i + 1, j + 1) = ((i == j) ? 1.0 : 0.0) + (ch - 1.0) * k[i] * k[j];
    }
    return r;
}

LorentzTransform standard_boost_massive(const FourVector& p, double m) {
    if (m <= 0.0) throw std::domain_error("standard_boost_massive: mass must be positive");
    if (p.t <= 0.0) throw std::domain_error("standard_boost_massive: p0 must be positive");
    if (std::abs(minkowski_dot(p, p) - m * m) > kUnitTol * scale2(p))
        throw std::domain_error("standard_boost_massive: momentum off shell");
    const ThreeVector pv = p.spatial();
    const double pn = pv.norm();
    LorentzTransform r = LorentzTransform::identity();
    const double g = p.t / m;  // cosh(chi)
    r(0, 0) = g;
    if (pn == 0.0) return r;
    const double k[3] = {pv.x / pn, pv.y / pn, pv.z / pn};
    const double sh = pn / m;
    for (int i = 0; i < 3; ++i) {
        r(0, i + 1) = sh * k[i];
        r(i + 1, 0) = sh * k[i];
        for (int j = 0; j < 3; ++j)
            r(i + 1, j + 1) = ((i == j) ? 1.0 : 0.0) + (g - 1.0) * k[i] * k[j];
    }
    return r;
}

LorentzTransform wigner_rotation(const LorentzTransform& lambda, const FourVector& p, double m) {
    const FourVector lp = lambda.apply(p);
    return standard_boost_massive(lp, m).inverse() * lambda * standard_boost_massive(p, m);
}

}  // namespace epr
