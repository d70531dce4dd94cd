#ifndef RELKIN_CROSSSEC_HPP
#define RELKIN_CROSSSEC_HPP

#include <stdexcept>
#include <string>

namespace relkin {

enum class CrossSectionModel { soft, hard, hardball };

// Scattering kernel family sigma(g, theta).
//   soft:     scale * g^{-b} sin^gamma(theta),   0 < b < min(4, 4+gamma)
//   hard:     scale * (g^a + g^{-b}) sin^gamma(theta),
//             0 <= a <= 2+gamma, 0 <= b < min(4, 4+gamma)
//   hardball: scale
// All families need gamma > -2 so the angular integral converges.
struct CrossSection {
    CrossSectionModel model = CrossSectionModel::soft;
    double a = 0.0;
    double b = 1.0;
    double gamma = 0.0;
    double sigma0_scale = 1.0;
    double epsilon_cutoff = 0.1;

    // throws std::invalid_argument with the violated bound spelled out
    void validate() const;

    static CrossSection soft_default();   // b=1, gamma=0
    static CrossSection hard_default();   // a=1, b=0, gamma=0
    static CrossSection hardball_default();

    // zeta exponent of the kernel envelope, min{2-|gamma|, 4-b, 2}/4
    double zeta() const;
    // weight exponent base: b for soft, 2 for hard/hardball (w_l = p0^{l b_w/2})
    double weight_exponent() const { return model == CrossSectionModel::soft ? b : 2.0; }
};

class SingularityError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// sigma(g, theta); theta in [0, pi].
double sigma(const CrossSection& cs, double g, double theta);

// g-dependent factor alone (scale * g^{-b} etc.), no angular part.
double sigma_g(const CrossSection& cs, double g);

// int_{S^2} sigma(g, theta(omega)) domega = 2 pi sigma_g(g) int sin^{1+gamma}.
double sigma_angular_total(const CrossSection& cs, double g);

// Smooth relative-momentum cutoff: 0 for g <= eps, 1 for g >= 2 eps, the
// quintic smoothstep in between (C^2).
double chi(double g, double epsilon);

} // namespace relkin

#endif
