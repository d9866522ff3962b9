#pragma once

#include <cmath>
#include <random>

#include "eprcorr/decay.hpp"
#include "eprcorr/minkowski.hpp"

namespace epr::test {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

inline double urand(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

inline ThreeDirection rand_dir(std::mt19937_64& rng) {
    const double z = 2.0 * urand(rng) - 1.0;
    const double phi = kTwoPi * urand(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return ThreeDirection::normalized({r * std::cos(phi), r * std::sin(phi), z});
}

inline ThreeDirection rand_orthogonal(std::mt19937_64& rng, const ThreeDirection& n) {
    while (true) {
        const ThreeVector c = cross(n.vec(), rand_dir(rng).vec());
        if (c.norm() > 1e-6) return ThreeDirection::normalized(c);
    }
}

inline LorentzTransform rand_proper_transform(std::mt19937_64& rng, double max_rapidity = 1.5) {
    const LorentzTransform r1 = rotation_about_axis(rand_dir(rng), kPi * urand(rng));
    const LorentzTransform b = pure_boost(rand_dir(rng), max_rapidity * (2.0 * urand(rng) - 1.0));
    const LorentzTransform r2 = rotation_about_axis(rand_dir(rng), kPi * urand(rng));
    return r1 * b * r2;
}

inline FourVector rand_onshell(std::mt19937_64& rng, double m, double pscale) {
    const ThreeVector pv = pscale * (2.0 * urand(rng) - 1.0) * rand_dir(rng).vec();
    return {std::sqrt(m * m + dot(pv, pv)), pv.x, pv.y, pv.z};
}

// random decay in the c.m. frame, optionally boosted to a general frame
inline DecayKinematics rand_kinematics(std::mt19937_64& rng, bool boosted) {
    const double m = 0.5 + 1.5 * urand(rng);
    const double M = m * (1.0 + 9.0 * urand(rng) + 1e-3);
    DecayKinematics cm = cm_kinematics(M, m, rand_dir(rng));
    if (!boosted) return cm;
    const LorentzTransform l = rand_proper_transform(rng);
    return DecayKinematics(l.apply(cm.p()), l.apply(cm.k()), m);
}

}  // namespace epr::test
