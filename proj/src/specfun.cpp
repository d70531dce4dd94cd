#include "relkin/specfun.hpp"

#include <cmath>

namespace relkin {

namespace {

// Power series sum_m (y/2)^{2m} / (m!)^2; exact (no cancellation) but the
// value itself overflows past y ~ 713.
double i0_series(double y) {
    const double q = 0.25 * y * y;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 400; ++m) {
        term *= q / (double(m) * double(m));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

// Asymptotic series for e^{-y} I0(y) sqrt(2 pi y); usable for y >= 40.
double i0_scaled_asym(double y) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 30; ++k) {
        const double num = (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= num / (8.0 * y * k);
        sum += term;
        if (term < 1e-17) break;
    }
    return sum / std::sqrt(2.0 * M_PI * y);
}

} // namespace

double bessel_i0(double y) {
    if (y < 0.0) y = -y;
    if (y > 700.0)
        throw std::overflow_error("bessel_i0: argument > 700 overflows, use exp_i0");
    if (y <= 40.0) return i0_series(y);
    return std::exp(y) * i0_scaled_asym(y);
}

double bessel_i0_scaled(double y) {
    if (y < 0.0) y = -y;
    if (y <= 40.0) return std::exp(-y) * i0_series(y);
    return i0_scaled_asym(y);
}

double exp_i0(double a, double y) {
    if (y < 0.0) y = -y;
    if (y <= 40.0) {
        if (a > 745.0) {
            // e^{-a} underflows alone; log-scale the series value
            const double logs = std::log(i0_series(y));
            const double e = logs - a;
            return (e < -745.0) ? 0.0 : std::exp(e);
        }
        return std::exp(-a) * i0_series(y);
    }
    const double e = y - a;
    if (e < -745.0) return 0.0;
    return std::exp(e) * i0_scaled_asym(y);
}

double laplace_bessel(int kind, double R, double r) {
    if (!(R > r && r >= 0.0))
        throw std::domain_error("laplace_bessel: requires R > r >= 0");
    const double w2 = R * R - r * r;
    const double w = std::sqrt(w2);
    if (kind == 0) return std::exp(-w) / w;
    if (kind == 1) return R / w2 * (1.0 + 1.0 / w) * std::exp(-w);
    throw std::domain_error("laplace_bessel: kind must be 0 or 1");
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev-based initial guess
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[n - 1 - i] = weights[i];
    }
}

QuadratureRule QuadratureRule::semi_infinite(int n, double rel_tol) {
    if (n < 16) n = 16;
    QuadratureRule rule;
    rule.target_rel_tol = rel_tol;
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = 0.5 * (x[i] + 1.0);
        rule.weights[i] = 0.5 * w[i];
    }
    return rule;
}

namespace {

double apply_substituted(const std::function<double(double)>& f,
                         const std::vector<double>& t, const std::vector<double>& w) {
    double sum = 0.0;
    for (size_t i = 0; i < t.size(); ++i) {
        const double om = 1.0 - t[i];
        const double y = t[i] / om;
        sum += w[i] * f(y) / (om * om);
    }
    return sum;
}

} // namespace

double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureRule& rule) {
    int n = static_cast<int>(rule.nodes.size());
    double prev = apply_substituted(f, rule.nodes, rule.weights);
    for (int level = 0; level < 7; ++level) {
        n *= 2;
        std::vector<double> x, w, t(n), tw(n);
        gauss_legendre(n, x, w);
        for (int i = 0; i < n; ++i) {
            t[i] = 0.5 * (x[i] + 1.0);
            tw[i] = 0.5 * w[i];
        }
        const double cur = apply_substituted(f, t, tw);
        const double scale = std::max(std::abs(cur), 1e-300);
        if (std::abs(cur - prev) <= rule.target_rel_tol * scale) return cur;
        prev = cur;
    }
    throw AccuracyError("integrate_semi_infinite: no convergence after max refinement",
                        prev);
}

double sin_power_integral(double gamma) {
    if (gamma <= -2.0)
        throw std::domain_error("sin_power_integral: requires gamma > -2");
    return std::sqrt(M_PI) * std::exp(std::lgamma(1.0 + 0.5 * gamma) -
                                      std::lgamma(1.5 + 0.5 * gamma));
}

} // namespace relkin
