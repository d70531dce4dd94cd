#include "relkin/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "relkin/specfun.hpp"

namespace relkin {

GridSpec GridSpec::refined(double factor) const {
    GridSpec out = *this;
    out.radial = static_cast<int>(std::lround(radial * factor));
    return out;
}

GridSpec GridSpec::from_counts(double pmax, int radial_nodes, int sphere_nodes) {
    GridSpec spec;
    spec.pmax = pmax;
    spec.radial = radial_nodes;
    int polar = static_cast<int>(std::lround(std::sqrt(sphere_nodes * 4.0 / 3.0) / 2.0)) * 2;
    polar = std::max(polar, 4);
    int azimuth = std::max(4, sphere_nodes / polar);
    spec.polar = polar;
    spec.azimuth = azimuth;
    return spec;
}

MomentumGrid::MomentumGrid(const GridSpec& spec) : spec_(spec) {
    if (spec.radial < 8 || spec.polar < 4 || spec.azimuth < 4 || spec.pmax <= 1.0)
        throw std::invalid_argument("momentum grid: need radial >= 8, polar >= 4, "
                                    "azimuth >= 4, pmax > 1");
    std::vector<double> gt, gw;
    gauss_legendre(spec.radial, gt, gw);
    std::vector<double> rad_w(spec.radial);
    rad_r_.resize(spec.radial);
    for (int k = 0; k < spec.radial; ++k) {
        const double t = 0.5 * (gt[k] + 1.0);
        const double wt = 0.5 * gw[k];
        const double r = spec.pmax * t * t * (3.0 - 2.0 * t);
        const double dr = spec.pmax * 6.0 * t * (1.0 - t);
        rad_r_[k] = r;
        rad_w[k] = wt * dr * r * r;
    }

    std::vector<double> pol_w;
    gauss_legendre(spec.polar, pol_mu_, pol_w);

    az_phi_.resize(spec.azimuth);
    const double wphi = 2.0 * M_PI / spec.azimuth;
    for (int j = 0; j < spec.azimuth; ++j)
        az_phi_[j] = wphi * (j + 0.5);

    const int total = spec.radial * spec.polar * spec.azimuth;
    nodes_.reserve(total);
    weights_.reserve(total);
    p0_.reserve(total);
    for (int k = 0; k < spec.radial; ++k) {
        for (int i = 0; i < spec.polar; ++i) {
            const double mu = pol_mu_[i];
            const double sn = std::sqrt(std::max(0.0, 1.0 - mu * mu));
            for (int j = 0; j < spec.azimuth; ++j) {
                const Momentum3 p{rad_r_[k] * sn * std::cos(az_phi_[j]),
                                  rad_r_[k] * sn * std::sin(az_phi_[j]),
                                  rad_r_[k] * mu};
                nodes_.push_back(p);
                weights_.push_back(rad_w[k] * pol_w[i] * wphi);
                p0_.push_back(energy(p));
            }
        }
    }
}

double MomentumGrid::mass_defect() const {
    double mass = 0.0;
    for (int i = 0; i < size(); ++i) mass += weights_[i] * std::exp(-p0_[i]);
    mass /= 4.0 * M_PI;
    return std::abs(mass - kJuttnerMass) / kJuttnerMass;
}

double MomentumGrid::inner(const std::vector<double>& f, const std::vector<double>& g) const {
    double sum = 0.0;
    for (int i = 0; i < size(); ++i) sum += weights_[i] * f[i] * g[i];
    return sum;
}

namespace {

// 1D Lagrange weights at x for the nodes xs[first..first+count)
void lagrange_weights(const double* xs, int first, int count, double x, double* out) {
    for (int a = 0; a < count; ++a) {
        double w = 1.0;
        const double xa = xs[first + a];
        for (int b = 0; b < count; ++b) {
            if (b == a) continue;
            w *= (x - xs[first + b]) / (xa - xs[first + b]);
        }
        out[a] = w;
    }
}

int bracket4(const std::vector<double>& xs, double x) {
    const int n = static_cast<int>(xs.size());
    int hi = static_cast<int>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
    int first = hi - 2;
    return std::clamp(first, 0, n - 4);
}

} // namespace

MomentumGrid::Stencil MomentumGrid::stencil(const Momentum3& x, double kappa) const {
    Stencil st;
    const double r = std::min(x.norm(), rad_r_.back());
    double mu = 1.0, phi = 0.0;
    if (r > 0.0) {
        mu = std::clamp(x.p3 / x.norm(), -1.0, 1.0);
        phi = std::atan2(x.p2, x.p1);
        if (phi < 0.0) phi += 2.0 * M_PI;
    }

    const int nr = (spec_.radial >= 4) ? 4 : spec_.radial;
    const int np = (spec_.polar >= 4) ? 4 : spec_.polar;
    const int na = (spec_.azimuth >= 4) ? 4 : spec_.azimuth;

    const int r0 = (spec_.radial >= 4) ? bracket4(rad_r_, r) : 0;
    const int m0 = (spec_.polar >= 4) ? bracket4(pol_mu_, mu) : 0;

    double wr[4], wm[4], wa[4];
    lagrange_weights(rad_r_.data(), r0, nr, r, wr);
    lagrange_weights(pol_mu_.data(), m0, np, mu, wm);

    // periodic azimuth: unwrap the nearest copies of the stencil nodes
    const double dphi = 2.0 * M_PI / spec_.azimuth;
    int j0 = static_cast<int>(std::floor(phi / dphi - 0.5)) - 1;
    double aphi[4];
    int aidx[4];
    for (int a = 0; a < na; ++a) {
        const int j = j0 + a;
        const int jw = ((j % spec_.azimuth) + spec_.azimuth) % spec_.azimuth;
        aidx[a] = jw;
        aphi[a] = dphi * (j + 0.5);
    }
    lagrange_weights(aphi, 0, na, phi, wa);

    const double x0 = energy(x);
    st.n = 0;
    for (int a = 0; a < nr; ++a) {
        for (int b = 0; b < np; ++b) {
            for (int c = 0; c < na; ++c) {
                const int idx = node_index(r0 + a, m0 + b, aidx[c]);
                st.idx[st.n] = idx;
                st.w[st.n] = wr[a] * wm[b] * wa[c] * std::exp(kappa * (p0_[idx] - x0));
                ++st.n;
            }
        }
    }
    return st;
}

double MomentumGrid::interpolate(const std::vector<double>& values, const Momentum3& x,
                                 double kappa) const {
    const Stencil st = stencil(x, kappa);
    double sum = 0.0;
    for (int k = 0; k < st.n; ++k) sum += st.w[k] * values[st.idx[k]];
    return sum;
}

} // namespace relkin
