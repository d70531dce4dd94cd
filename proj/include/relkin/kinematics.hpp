#ifndef RELKIN_KINEMATICS_HPP
#define RELKIN_KINEMATICS_HPP

#include <array>
#include <cmath>
#include <stdexcept>

// Mass-shell kinematics for binary elastic collisions, units m = c = kT = 1.
// Metric signature (-,+,+,+); every momentum carries energy p0 = sqrt(1+|p|^2).

namespace relkin {

struct Momentum3 {
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;

    double norm2() const { return p1 * p1 + p2 * p2 + p3 * p3; }
    double norm() const { return std::sqrt(norm2()); }
};

inline Momentum3 operator+(const Momentum3& a, const Momentum3& b) {
    return {a.p1 + b.p1, a.p2 + b.p2, a.p3 + b.p3};
}
inline Momentum3 operator-(const Momentum3& a, const Momentum3& b) {
    return {a.p1 - b.p1, a.p2 - b.p2, a.p3 - b.p3};
}
inline Momentum3 operator*(double s, const Momentum3& a) {
    return {s * a.p1, s * a.p2, s * a.p3};
}
inline double dot(const Momentum3& a, const Momentum3& b) {
    return a.p1 * b.p1 + a.p2 * b.p2 + a.p3 * b.p3;
}
inline Momentum3 cross(const Momentum3& a, const Momentum3& b) {
    return {a.p2 * b.p3 - a.p3 * b.p2,
            a.p3 * b.p1 - a.p1 * b.p3,
            a.p1 * b.p2 - a.p2 * b.p1};
}

// Energy on the mass shell.
inline double energy(const Momentum3& p) { return std::sqrt(1.0 + p.norm2()); }

// Four-momentum with the energy recomputed from the spatial part, so the
// mass-shell constraint cannot drift.
struct FourMomentum {
    double p0;
    Momentum3 p;

    explicit FourMomentum(const Momentum3& sp) : p0(energy(sp)), p(sp) {}
};

// Lorentz invariants of a pair: s = -(p+q)^2, g = sqrt((p-q)^2), and the
// Moller velocity g sqrt(s)/(p0 q0).  Always s = g^2 + 4.
struct CollisionInvariants {
    double s;
    double g;
    double vmoller;
};

class KinematicsError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

CollisionInvariants invariants(const Momentum3& p, const Momentum3& q);

double moller_velocity(const Momentum3& p, const Momentum3& q);

// Moller velocity through the relative-velocity square root expression,
// |p/p0 - q/q0|^2 - |p/p0 x q/q0|^2.  Equal to the g sqrt(s)/(p0 q0) form.
double moller_velocity_relvel(const Momentum3& p, const Momentum3& q);

// Post-collision momenta on the unit sphere parametrization:
//   p' = (p+q)/2 + (g/2)[w + (gamma-1)(p+q) (p+q).w / |p+q|^2]
// evaluated through the cancellation-free form
//   (gamma-1)/|p+q|^2 = 1/(sqrt(s)(p0+q0+sqrt(s))).
// g = 0 (p == q) returns the pair unchanged.
std::pair<Momentum3, Momentum3> post_collision(const Momentum3& p, const Momentum3& q,
                                               const Momentum3& omega);

// cos(theta) = (p-q)^mu (p'-q')_mu / g^2.  Requires g > 0.
double scattering_cos(const Momentum3& p, const Momentum3& q,
                      const Momentum3& pprime, const Momentum3& qprime);

// Boost to the center-of-momentum frame of the pair (p, q).  Acting on
// energy-first four-vectors, lambda maps (p0+q0, p+q) to (sqrt(s),0,0,0)
// and (p0-q0, p-q) to (0,0,0,-g); rows are orthonormal in the Minkowski
// metric.  Collinear pairs get rows 1-2 from a deterministic Gram-Schmidt
// completion.  Requires g > 1e-10.
struct LorentzBoost {
    std::array<std::array<double, 4>, 4> lambda;

    std::array<double, 4> apply(const std::array<double, 4>& v) const;
    // max |Lambda^T eta Lambda - eta| over entries, eta = diag(-1,1,1,1)
    double metric_defect() const;
    double determinant() const;
};

LorentzBoost lorentz_cm(const Momentum3& p, const Momentum3& q);

// Juttner equilibrium, e^{-p0}/(4 pi).  Not renormalized: the measured
// integral over R^3 equals the Bessel constant K2(1) ~= 1.6248388986,
// not 1 (see README).
inline double juttner(const Momentum3& p) {
    return std::exp(-energy(p)) / (4.0 * M_PI);
}

// Value of int_{R^3} J dp for the un-normalized Juttner function above.
inline constexpr double kJuttnerMass = 1.624838898635177;

} // namespace relkin

#endif
