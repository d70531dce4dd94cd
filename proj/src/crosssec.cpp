#include "relkin/crosssec.hpp"

#include <algorithm>
#include <cmath>

#include "relkin/specfun.hpp"

namespace relkin {

void CrossSection::validate() const {
    if (!(sigma0_scale > 0.0))
        throw std::invalid_argument("cross-section: sigma0_scale must be > 0");
    if (!(epsilon_cutoff > 0.0))
        throw std::invalid_argument("cross-section: epsilon must be > 0");
    if (model == CrossSectionModel::hardball) return;
    if (!(gamma > -2.0))
        throw std::invalid_argument("cross-section: requires gamma > -2, got gamma = " +
                                    std::to_string(gamma));
    const double bmax = std::min(4.0, 4.0 + gamma);
    if (model == CrossSectionModel::soft) {
        if (!(b > 0.0 && b < bmax))
            throw std::invalid_argument(
                "cross-section: soft model requires 0 < b < min(4, 4+gamma), got b = " +
                std::to_string(b));
    } else {
        if (!(b >= 0.0 && b < bmax))
            throw std::invalid_argument(
                "cross-section: hard model requires 0 <= b < min(4, 4+gamma), got b = " +
                std::to_string(b));
        if (!(a >= 0.0 && a <= 2.0 + gamma))
            throw std::invalid_argument(
                "cross-section: hard model requires 0 <= a <= 2+gamma, got a = " +
                std::to_string(a));
    }
}

CrossSection CrossSection::soft_default() {
    return {CrossSectionModel::soft, 0.0, 1.0, 0.0, 1.0, 0.1};
}
CrossSection CrossSection::hard_default() {
    return {CrossSectionModel::hard, 1.0, 0.0, 0.0, 1.0, 0.1};
}
CrossSection CrossSection::hardball_default() {
    return {CrossSectionModel::hardball, 0.0, 0.0, 0.0, 1.0, 0.1};
}

double CrossSection::zeta() const {
    const double ag = (model == CrossSectionModel::hardball) ? 0.0 : std::abs(gamma);
    const double bb = (model == CrossSectionModel::hardball) ? 0.0 : b;
    return std::min({2.0 - ag, 4.0 - bb, 2.0}) / 4.0;
}

double sigma_g(const CrossSection& cs, double g) {
    switch (cs.model) {
        case CrossSectionModel::hardball:
            return cs.sigma0_scale;
        case CrossSectionModel::soft:
            if (g <= 0.0)
                throw SingularityError("sigma: soft cross-section singular at g = 0");
            return cs.sigma0_scale * std::pow(g, -cs.b);
        case CrossSectionModel::hard:
            if (g <= 0.0) {
                if (cs.b > 0.0)
                    throw SingularityError("sigma: hard cross-section with b > 0 singular at g = 0");
                return cs.sigma0_scale; // g^a -> 0, g^0 = 1
            }
            return cs.sigma0_scale * (std::pow(g, cs.a) + std::pow(g, -cs.b));
    }
    return 0.0;
}

double sigma(const CrossSection& cs, double g, double theta) {
    const double base = sigma_g(cs, g);
    if (cs.model == CrossSectionModel::hardball || cs.gamma == 0.0) return base;
    const double sn = std::sin(theta);
    return base * std::pow(sn, cs.gamma);
}

double sigma_angular_total(const CrossSection& cs, double g) {
    if (cs.model == CrossSectionModel::hardball) return 4.0 * M_PI * cs.sigma0_scale;
    return 2.0 * M_PI * sigma_g(cs, g) * sin_power_integral(cs.gamma);
}

double chi(double g, double epsilon) {
    const double t = (g - epsilon) / epsilon;
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * t * (t * (6.0 * t - 15.0) + 10.0);
}

} // namespace relkin
