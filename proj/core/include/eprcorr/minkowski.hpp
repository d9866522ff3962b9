#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <concepts>

namespace epr {

struct ThreeVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const { return std::sqrt(x * x + y * y + z * z); }

    ThreeVector operator+(const ThreeVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
    ThreeVector operator-(const ThreeVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
    ThreeVector operator-() const { return {-x, -y, -z}; }
    ThreeVector operator*(double s) const { return {s * x, s * y, s * z}; }
};

inline ThreeVector operator*(double s, const ThreeVector& v) { return v * s; }

inline double dot(const ThreeVector& a, const ThreeVector& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline ThreeVector cross(const ThreeVector& a, const ThreeVector& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Unit 3-vector. The constructor rejects non-unit input; use normalized()
/// to build one from an arbitrary non-zero vector.
class ThreeDirection {
  public:
    explicit ThreeDirection(const ThreeVector& v);
    ThreeDirection(double nx, double ny, double nz) : ThreeDirection(ThreeVector{nx, ny, nz}) {}

    static ThreeDirection normalized(const ThreeVector& v);

    const ThreeVector& vec() const { return v_; }
    double x() const { return v_.x; }
    double y() const { return v_.y; }
    double z() const { return v_.z; }

  private:
    ThreeVector v_;
};

/// Real four-vector in natural units, metric signature (+,-,-,-).
struct FourVector {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    ThreeVector spatial() const { return {x, y, z}; }

    FourVector operator+(const FourVector& o) const { return {t + o.t, x + o.x, y + o.y, z + o.z}; }
    FourVector operator-(const FourVector& o) const { return {t - o.t, x - o.x, y - o.y, z - o.z}; }
    FourVector operator*(double s) const { return {s * t, s * x, s * y, s * z}; }

    double operator[](int mu) const {
        switch (mu) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
};

inline FourVector operator*(double s, const FourVector& v) { return v * s; }

/// Minkowski bilinear form a.b = a0 b0 - a.b with eta = diag(1,-1,-1,-1).
inline double minkowski_dot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

/// Space inversion, v -> (v0, -v).
inline FourVector parity_flip(const FourVector& v) { return {v.t, -v.x, -v.y, -v.z}; }

/// Four-vector with complex components (photon polarization amplitudes).
struct ComplexFourVector {
    std::complex<double> t{};
    std::complex<double> x{};
    std::complex<double> y{};
    std::complex<double> z{};

    ComplexFourVector() = default;
    ComplexFourVector(std::complex<double> t_, std::complex<double> x_, std::complex<double> y_,
                      std::complex<double> z_)
        : t(t_), x(x_), y(y_), z(z_) {}
    ComplexFourVector(const FourVector& v) : t(v.t), x(v.x), y(v.y), z(v.z) {}

    ComplexFourVector conj() const { return {std::conj(t), std::conj(x), std::conj(y), std::conj(z)}; }
    ComplexFourVector operator+(const ComplexFourVector& o) const {
        return {t + o.t, x + o.x, y + o.y, z + o.z};
    }

    std::complex<double> operator[](int mu) const {
        switch (mu) {
            case 0: return t;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
};

// template so that braced-list calls resolve to the real overload above
template <class V>
    requires std::same_as<V, ComplexFourVector>
std::complex<double> minkowski_dot(const V& a, const V& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

/// 4x4 real matrix acting on four-vectors; factories below produce proper
/// orthochronous transforms only.
class LorentzTransform {
  public:
    LorentzTransform() : m_{} {}

    static LorentzTransform identity();

    double& operator()(int i, int j) { return m_[static_cast<size_t>(4 * i + j)]; }
    double operator()(int i, int j) const { return m_[static_cast<size_t>(4 * i + j)]; }

    FourVector apply(const FourVector& v) const;
    LorentzTransform operator*(const LorentzTransform& o) const;

    /// Inverse via eta Lambda^T eta; exact for Lorentz matrices.
    LorentzTransform inverse() const;

    /// Largest entry of Lambda^T eta Lambda - eta.
    double metric_residual() const;

  private:
    std::array<double, 16> m_;
};

/// Rotation with spatial columns (a, n x a, n): maps the z axis to n.
/// Requires a and n unit and orthogonal (tolerance 1e-10).
LorentzTransform rotation_to_direction(const ThreeDirection& n, const ThreeDirection& a);

/// Spatial rotation by `angle` about the axis n (Rodrigues form).
LorentzTransform rotation_about_axis(const ThreeDirection& n, double angle);

/// Boost along n with the given rapidity; rapidity 0 gives the identity.
LorentzTransform pure_boost(const ThreeDirection& n, double rapidity);

/// Canonical rotation-free boost L_p with L_p (m,0,0,0) = p.
/// Throws std::domain_error if p is off shell for mass m or p0 <= 0.
LorentzTransform standard_boost_massive(const FourVector& p, double m);

/// Wigner rotation R(Lambda,p) = L_{Lambda p}^{-1} Lambda L_p.
LorentzTransform wigner_rotation(const LorentzTransform& lambda, const FourVector& p, double m);

}  // namespace epr
