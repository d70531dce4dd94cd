#ifndef RELKIN_SPECFUN_HPP
#define RELKIN_SPECFUN_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace relkin {

// Modified Bessel function I0.  Power series below y = 40 (all terms
// positive, no cancellation), asymptotic expansion above.  Throws for
// y > 700 where the unscaled value overflows; use exp_i0 instead.
double bessel_i0(double y);

// e^{-y} I0(y), stable for all y >= 0.
double bessel_i0_scaled(double y);

// Fused evaluator e^{-a} I0(y).  The kernel integrands need a >= y, where
// the product stays bounded while each factor alone over/underflows.
double exp_i0(double a, double y);

// Appendix Laplace transform identities, valid for R > r >= 0:
//   kind 0: int_0^inf e^{-R sqrt(1+y^2)} y I0(ry)/sqrt(1+y^2) dy
//           = e^{-w}/w,                w = sqrt(R^2-r^2)
//   kind 1: int_0^inf e^{-R sqrt(1+y^2)} y I0(ry) dy
//           = R/(R^2-r^2) (1 + 1/w) e^{-w}
double laplace_bessel(int kind, double R, double r);

struct QuadratureRule {
    std::vector<double> nodes;   // Gauss-Legendre nodes on (0,1)
    std::vector<double> weights; // matching weights
    double target_rel_tol = 1e-10;

    // y = t/(1-t) maps (0,1) -> (0,inf); this is the declared substitution.
    static QuadratureRule semi_infinite(int n, double rel_tol = 1e-10);
};

class AccuracyError : public std::runtime_error {
  public:
    AccuracyError(const std::string& what, double best)
        : std::runtime_error(what), best_estimate(best) {}
    double best_estimate;
};

// Gauss-Legendre nodes/weights on (-1,1).
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Integrates f over (0,inf) through the rule's substitution, doubling the
// node count until two consecutive estimates agree to target_rel_tol.
// Throws AccuracyError (carrying the best estimate) on non-convergence.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureRule& rule);

// int_0^pi sin^{1+gamma})(theta) dtheta = sqrt(pi) Gamma(1+gamma/2) / Gamma(3/2+gamma/2),
// finite for gamma > -2.
double sin_power_integral(double gamma);

} // namespace relkin

#endif
