#include "relkin/kinematics.hpp"

#include <algorithm>

namespace relkin {

CollisionInvariants invariants(const Momentum3& p, const Momentum3& q) {
    const double p0 = energy(p);
    const double q0 = energy(q);
    const double minusdot = p0 * q0 - dot(p, q); // -p^mu q_mu >= 1
    double g2 = 2.0 * (minusdot - 1.0);
    if (g2 < -1e-12)
        throw KinematicsError("invariants: negative g^2, momenta off the mass shell");
    g2 = std::max(g2, 0.0);
    const double g = std::sqrt(g2);
    const double s = g2 + 4.0;
    return {s, g, g * std::sqrt(s) / (p0 * q0)};
}

double moller_velocity(const Momentum3& p, const Momentum3& q) {
    return invariants(p, q).vmoller;
}

double moller_velocity_relvel(const Momentum3& p, const Momentum3& q) {
    const double p0 = energy(p);
    const double q0 = energy(q);
    const Momentum3 vp = (1.0 / p0) * p;
    const Momentum3 vq = (1.0 / q0) * q;
    const double rel2 = (vp - vq).norm2() - cross(vp, vq).norm2();
    return std::sqrt(std::max(rel2, 0.0));
}

std::pair<Momentum3, Momentum3> post_collision(const Momentum3& p, const Momentum3& q,
                                               const Momentum3& omega) {
    if (std::abs(omega.norm2() - 1.0) > 2e-12)
        throw KinematicsError("post_collision: omega is not a unit vector");
    const auto inv = invariants(p, q);
    if (inv.g == 0.0) return {p, q}; // zero relative momentum: no scattering
    const double p0 = energy(p);
    const double q0 = energy(q);
    const Momentum3 tot = p + q;
    const double rs = std::sqrt(inv.s);
    // (gamma - 1)/|p+q|^2 without cancellation
    const double fac = 1.0 / (rs * (p0 + q0 + rs));
    const double proj = dot(tot, omega);
    const Momentum3 shift = (0.5 * inv.g) * (omega + (proj * fac) * tot);
    const Momentum3 half = 0.5 * tot;
    return {half + shift, half - shift};
}

double scattering_cos(const Momentum3& p, const Momentum3& q,
                      const Momentum3& pprime, const Momentum3& qprime) {
    const auto inv = invariants(p, q);
    if (inv.g <= 0.0)
        throw KinematicsError("scattering_cos: g = 0, angle undefined");
    const double d0 = (energy(p) - energy(q)) * (energy(pprime) - energy(qprime));
    const double num = -d0 + dot(p - q, pprime - qprime);
    return std::clamp(num / (inv.g * inv.g), -1.0, 1.0);
}

std::array<double, 4> LorentzBoost::apply(const std::array<double, 4>& v) const {
    std::array<double, 4> out{};
    for (int r = 0; r < 4; ++r)
        out[r] = lambda[r][0] * v[0] + lambda[r][1] * v[1] + lambda[r][2] * v[2] +
                 lambda[r][3] * v[3];
    return out;
}

double LorentzBoost::metric_defect() const {
    // (Lambda^T eta Lambda)_{ab} = -L0a L0b + sum_i Lia Lib
    double worst = 0.0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            double v = -lambda[0][a] * lambda[0][b];
            for (int i = 1; i < 4; ++i) v += lambda[i][a] * lambda[i][b];
            const double eta = (a == b) ? (a == 0 ? -1.0 : 1.0) : 0.0;
            worst = std::max(worst, std::abs(v - eta));
        }
    }
    return worst;
}

double LorentzBoost::determinant() const {
    const auto& m = lambda;
    double det = 0.0;
    for (int c = 0; c < 4; ++c) {
        // cofactor expansion along row 0
        double sub[3][3];
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int k = 0; k < 4; ++k) {
                if (k == c) continue;
                sub[r - 1][cc++] = m[r][k];
            }
        }
        const double minor = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                             sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                             sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
        det += ((c % 2 == 0) ? 1.0 : -1.0) * m[0][c] * minor;
    }
    return det;
}

namespace {

Momentum3 normalized(const Momentum3& v) {
    const double n = v.norm();
    return {v.p1 / n, v.p2 / n, v.p3 / n};
}

// Deterministic completion of rows 1-2 when p x q vanishes: any orthonormal
// spatial pair orthogonal to the common p, q direction keeps the matrix a
// Lorentz map.
void collinear_rows(const Momentum3& axis, LorentzBoost& boost) {
    const Momentum3 n = normalized(axis);
    Momentum3 seed{1.0, 0.0, 0.0};
    if (std::abs(n.p1) > 0.9) seed = {0.0, 1.0, 0.0};
    Momentum3 e1 = seed - dot(seed, n) * n;
    e1 = normalized(e1);
    const Momentum3 e2 = cross(n, e1);
    boost.lambda[1] = {0.0, e1.p1, e1.p2, e1.p3};
    boost.lambda[2] = {0.0, e2.p1, e2.p2, e2.p3};
}

} // namespace

LorentzBoost lorentz_cm(const Momentum3& p, const Momentum3& q) {
    const auto inv = invariants(p, q);
    if (inv.g <= 1e-10)
        throw KinematicsError("lorentz_cm: g below tolerance, frame degenerate");
    const double p0 = energy(p);
    const double q0 = energy(q);
    const double g = inv.g;
    const double rs = std::sqrt(inv.s);
    const Momentum3 sum = p + q;
    const Momentum3 dif = p - q;
    const Momentum3 pxq = cross(p, q);
    const double npxq = pxq.norm();

    LorentzBoost boost{};
    boost.lambda[0] = {(p0 + q0) / rs, -sum.p1 / rs, -sum.p2 / rs, -sum.p3 / rs};
    boost.lambda[3] = {(p0 - q0) / g, -dif.p1 / g, -dif.p2 / g, -dif.p3 / g};

    const double scale = std::max({std::abs(p.p1), std::abs(p.p2), std::abs(p.p3),
                                   std::abs(q.p1), std::abs(q.p2), std::abs(q.p3), 1.0});
    if (npxq > 1e-12 * scale * scale) {
        const double m = dot(p, q) - p0 * q0; // p^mu q_mu
        const double denom = g * rs * npxq;
        boost.lambda[1][0] = 2.0 * npxq / (g * rs);
        boost.lambda[1][1] = 2.0 * (p.p1 * (p0 + q0 * m) + q.p1 * (q0 + p0 * m)) / denom;
        boost.lambda[1][2] = 2.0 * (p.p2 * (p0 + q0 * m) + q.p2 * (q0 + p0 * m)) / denom;
        boost.lambda[1][3] = 2.0 * (p.p3 * (p0 + q0 * m) + q.p3 * (q0 + p0 * m)) / denom;
        boost.lambda[2] = {0.0, pxq.p1 / npxq, pxq.p2 / npxq, pxq.p3 / npxq};
    } else {
        const Momentum3 axis = (sum.norm() > dif.norm()) ? sum : dif;
        collinear_rows(axis, boost);
    }
    return boost;
}

} // namespace relkin
